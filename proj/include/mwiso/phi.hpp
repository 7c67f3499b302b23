#pragma once

#include <optional>
#include <vector>

#include "mwiso/graph.hpp"
#include "mwiso/isoperimetry.hpp"
#include "mwiso/perm.hpp"
#include "mwiso/ratio.hpp"
#include "mwiso/report.hpp"

namespace mwiso {

enum class iso_mode { h, iota };
const char* iso_mode_name(iso_mode m);

/// A graph, a transitive action by automorphisms, and a realizer of the n-way
/// constant, with the gap  (n+1)-way > 2(n+1) * n-way  verified exactly.
struct gap_instance {
  graph g;
  perm_group group;
  partition realizer;  // original labels; achieves `low`
  int n = 0;
  iso_mode mode = iso_mode::h;
  ratio low;   // n-way constant
  ratio high;  // (n+1)-way constant
};

/// Result of the gap test; `low`/`high` are always filled so a missing gap can
/// still be reported.
struct gap_outcome {
  std::optional<gap_instance> instance;
  ratio low, high;
  bool gap() const { return instance.has_value(); }
};

gap_outcome build_gap_instance(const graph& g, const perm_group& group, int n, iso_mode mode,
                               const enum_options& opt = {});

/// Same, with a caller-supplied realizer (must achieve the n-way constant).
gap_outcome build_gap_instance(const graph& g, const perm_group& group, int n, iso_mode mode,
                               const partition& realizer, const enum_options& opt = {});

enum class overlap { close, far };

/// The two-option dichotomy for |g·A_j ∩ A_k| under the gap hypothesis.
/// Part labels refer to the size ordering (part 0 largest). A value strictly
/// between the options is impossible for a valid instance and throws
/// DichotomyViolation.
overlap classify_overlap(const gap_instance& inst, const perm& g, int j, int k);

/// Homomorphism into the symmetric group on [l] induced by how the action
/// nearly permutes the realizer's parts, with per-pair symmetric-difference
/// certificates.
struct phi_result {
  int l = 0;
  perm reindex;                             // original part label -> final label
  std::vector<perm> sigma;                  // aligned with group.elements
  std::vector<std::vector<int>> closeness;  // [element][j<l] = |g·A_j △ A_{σ_g(j)}|
  ratio closeness_bound;                    // 4 low/high * max part size
  bool induced_transitive = false;
  std::vector<vset> parts;                  // realizer parts in final label order
};

phi_result build_phi(const gap_instance& inst);

ordered_json phi_json(const phi_result& phi);

/// Almost-invariance consequence: with eps* = max_h |C △ h·C|/|C| over a
/// transitive action on W, |W \ C| <= (eps*/2)|W|. The optional eps records
/// whether a caller-supplied tolerance also covers eps*.
check_report almost_invariance_check(const perm_group& group, const vset& c,
                             std::optional<ratio> eps = std::nullopt);

/// Degree-l collapse cannot happen: checks phi.l == inst.n, attaching a full
/// reproduction bundle on failure.
check_report assert_l_equals_n(const phi_result& phi, const gap_instance& inst);

/// When the group has no subgroup of index n, both (n+1)-way constants are at
/// most 2(n+1) times the n-way ones.
check_report weak_imprimitivity_bound(const graph& g, const perm_group& group, int n,
                                      const enum_options& opt = {});

}  // namespace mwiso
