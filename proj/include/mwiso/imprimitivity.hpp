#pragma once

#include <utility>
#include <vector>

#include "mwiso/phi.hpp"

namespace mwiso {

/// G partitioned by (i,j) -> { g : sigma_g(j) = i }; all classes have size
/// |G|/n once the induced action has full degree.
struct coset_class_table {
  int n = 0;
  std::vector<std::vector<int>> members;  // index i*n+j -> element indices
  const std::vector<int>& cls(int i, int j) const {
    return members[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(j)];
  }
};

coset_class_table coset_classes(const phi_result& phi, const perm_group& group);

/// zeta_i: the average over g of the translated part indicators, exact, with
/// denominator dividing |G|.
struct averaged_function {
  int part = 0;
  std::vector<ratio> values;
};

std::vector<averaged_function> averaged_functions(const gap_instance& inst,
                                                  const phi_result& phi);

/// V_i = { v : zeta_i(v) > 1/2 }. A vertex on the fence (== 1/2) or covered by
/// no part means the hypothesis was violated: DegenerateLevelSet.
block_system level_set_blocks(const std::vector<averaged_function>& zetas);

struct imprimitivity_certificate {
  block_system blocks;
  partition realizer;          // parts in the phi label order
  std::vector<int> sym_diffs;  // |V_i △ A_i|
  ratio bound;                 // 4 low/high * |V|
  bool check_a = false, check_b = false, check_c = false;
};

imprimitivity_certificate build_certificate(const gap_instance& inst, const phi_result& phi);

ordered_json certificate_json(const imprimitivity_certificate& cert);

/// Injection of a block into its complement along edges (augmenting paths).
std::vector<std::pair<int, int>> hall_matching(const graph& g, const block_system& blocks,
                                               int block_index);

/// h_n >= h_{n+1}/(10n + h_{n+1}); in iota mode both
/// iota_n >= 2 iota_{n+1}/(20n + iota_{n+1}) and iota_{n+1} <= (11n+1) iota_n.
check_report successive_bound_check(const graph& g, const perm_group& group, int n, iso_mode mode,
                                const enum_options& opt = {});

/// For vertex- and edge-transitive graphs: h_{n+1} <= (10n+1) h_n.
check_report edge_transitive_check(const graph& g, const perm_group& group, int n,
                                   const enum_options& opt = {});

}  // namespace mwiso
