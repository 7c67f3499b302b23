#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "mwiso/error.hpp"
#include "mwiso/graph.hpp"
#include "mwiso/vset.hpp"

namespace mwiso {

/// Permutation of {0,...,k-1}, stored as its image vector.
struct perm {
  std::vector<int> img;

  perm() = default;
  explicit perm(std::vector<int> images);  // validates bijectivity

  static perm identity(int k);

  int size() const { return static_cast<int>(img.size()); }
  int operator[](int x) const { return img[static_cast<std::size_t>(x)]; }

  /// (p ∘ q)(x) = p(q(x)); domains must match.
  perm compose(const perm& q) const;
  perm inverse() const;
  bool is_identity() const;

  friend bool operator==(const perm& a, const perm& b) = default;
  friend std::strong_ordering operator<=>(const perm& a, const perm& b) {
    return a.img <=> b.img;
  }
};

vset apply_set(const perm& p, const vset& s);

/// Finite permutation group with its full element list materialized, sorted
/// lexicographically by image vector (so coset decompositions and reports are
/// reproducible). No stabilizer chains; ranges here are desk scale.
struct perm_group {
  int domain = 0;
  std::vector<perm> generators;
  std::vector<perm> elements;  // sorted, closed, contains the identity

  std::size_t order() const { return elements.size(); }
  /// Index into elements, or -1 if absent.
  int element_index(const perm& p) const;
};

/// Breadth-first closure of the generators. Throws group_too_large past cap.
perm_group generate_group(std::vector<perm> gens, std::size_t cap = 1'000'000);

/// Wraps an already-closed element set (validated) as a group.
perm_group group_from_elements(std::vector<perm> elements);

bool is_automorphism(const graph& g, const perm& p);

/// Full Aut(g) by image backtracking with degree/adjacency pruning.
perm_group automorphism_group(const graph& g, std::size_t cap = 1'000'000);

vset orbit(const perm_group& gr, int v);
perm_group stabilizer(const perm_group& gr, int v);
bool is_transitive(const perm_group& gr);

/// Partition of a group's domain into labeled parts; also used for the
/// realizers of the isoperimetric minima. Parts are non-empty; the canonical
/// labeling is a restricted-growth string (labels first appear in increasing
/// vertex order).
struct partition {
  std::vector<int> part_of;
  int parts = 0;

  partition() = default;
  partition(std::vector<int> labels, int num_parts);  // validates

  int size() const { return static_cast<int>(part_of.size()); }
  std::vector<vset> part_sets() const;
  partition canonical() const;
  bool is_canonical() const;

  friend bool operator==(const partition& a, const partition& b) = default;
};

struct block_system {
  partition blocks;
  int block_count() const { return blocks.parts; }
};

/// True iff every generator maps every part onto some part.
bool is_block_system(const perm_group& gr, const partition& p);

/// All size-n systems of imprimitivity of a transitive group, sorted by the
/// block containing vertex 0. Returns {} when n does not divide the domain.
std::vector<block_system> block_systems_of_size(const perm_group& gr, int n);

/// Decides whether some subgroup of index n exists, by bottom-up subgroup
/// lattice enumeration (cyclic subgroups, then closures of unions, memoized by
/// element-set hash). Requires |gr| <= cap.
bool has_subgroup_of_index(const perm_group& gr, int n, std::size_t cap = 240);

/// Permutation file format: `perm <i0> <i1> ...` lines, `#` comments.
std::vector<perm> parse_perms(const std::string& text);
std::string serialize_perms(const std::vector<perm>& ps);
std::vector<perm> load_perms(const std::string& path);
void save_perms(const std::vector<perm>& ps, const std::string& path);

/// Partition file format: `part <p0> <p1> ... <p|V|-1>`.
partition parse_partition(const std::string& text);
std::string serialize_partition(const partition& p);

}  // namespace mwiso
