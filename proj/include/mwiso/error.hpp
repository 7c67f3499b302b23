#pragma once

#include <stdexcept>
#include <string>

namespace mwiso {

enum class errc {
  self_loop,
  vertex_out_of_range,
  graph_too_large,
  not_disjoint,
  parse_error,
  io_error,
  domain_mismatch,
  invalid_permutation,
  group_too_large,
  not_transitive,
  not_symmetric,
  contains_identity,
  param_out_of_range,
  bad_group_table,
  n_out_of_range,
  empty_part,
  empty_set,
  invalid_partition,
  not_regular,
  enumeration_too_large,
  zero_function,
  convergence_failure,
  not_automorphisms,
  realizer_not_optimal,
  dichotomy_violation,
  uniqueness_violation,
  internal_invariant,
  not_full_degree,
  degenerate_level_set,
  not_connected,
  matching_incomplete,
  not_edge_transitive,
  divide_by_zero,
  arithmetic_overflow,
  unknown_family,
};

const char* errc_name(errc c);

/// Exception carrying a machine-checkable error code alongside the message.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace mwiso
