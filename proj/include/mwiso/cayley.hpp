#pragma once

#include <string>
#include <vector>

#include "mwiso/graph.hpp"
#include "mwiso/perm.hpp"

namespace mwiso {

/// Finite group as an explicit multiplication table. Element 0..order-1,
/// mul[a*order+b] = a*b. Construction validates identity and inverse laws for
/// all elements and associativity exhaustively up to order 64.
struct group_table {
  int order = 0;
  std::vector<int> mul;
  std::vector<int> inv;
  int identity = 0;

  int times(int a, int b) const {
    return mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(order) +
               static_cast<std::size_t>(b)];
  }
};

group_table make_group_table(int order, std::vector<int> mul);

group_table cyclic_group(int k);

/// Dihedral group of order 2n, generated by involutions a, b with (ab)^n = e.
/// Elements are indexed (ab)^i -> i and (ab)^i a -> n+i.
group_table dihedral_group(int n);
int dihedral_a(int n);  // index of a
int dihedral_b(int n);  // index of b

/// Direct product; element (x,y) has index x*|B| + y.
group_table product_group(const group_table& a, const group_table& b);

/// Symmetric group on k points; elements are the permutations of {0..k-1} in
/// lexicographic order of their image vectors.
group_table symmetric_group_table(int k);
std::vector<perm> symmetric_group_elements(int k);
int symmetric_group_index(int k, const perm& p);

struct cayley_result {
  graph g;
  perm_group action;  // left multiplications, acting by graph automorphisms
};

/// Cay(tbl, s): edges {g, g*s}; s must be symmetric and avoid the identity.
cayley_result cayley_graph(const group_table& tbl, const std::vector<int>& s);

/// Named families. Every constructor returns a vertex-transitive graph with a
/// transitive action attached.
cayley_result family_fattened_cycle(int m, int k);  // Z/m x Z/k, S = {±1} x Z/k
cayley_result family_k2_product(int n_cap);         // (Z/N x Z/2, (T x {0}) ∪ {(e,1)})
cayley_result family_dihedral_product(int n_cap, int n);
cayley_result family_cycle(int m);
cayley_result family_complete(int n_cap);

/// The block decomposition G = ⊔ H x {(ab)^i, (ab)^i a} used by the dihedral
/// product family (one part per i).
partition dihedral_product_designated_partition(int n_cap, int n);

/// The H x {0} / H x {1} split of the k2 product.
partition k2_product_designated_partition(int n_cap);

}  // namespace mwiso
