#include "mwiso/error.hpp"

namespace mwiso {

const char* errc_name(errc c) {
  switch (c) {
    case errc::self_loop: return "SelfLoop";
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::graph_too_large: return "GraphTooLarge";
    case errc::not_disjoint: return "NotDisjoint";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
    case errc::domain_mismatch: return "DomainMismatch";
    case errc::invalid_permutation: return "InvalidPermutation";
    case errc::group_too_large: return "GroupTooLarge";
    case errc::not_transitive: return "NotTransitive";
    case errc::not_symmetric: return "NotSymmetric";
    case errc::contains_identity: return "ContainsIdentity";
    case errc::param_out_of_range: return "ParamOutOfRange";
    case errc::bad_group_table: return "BadGroupTable";
    case errc::n_out_of_range: return "NOutOfRange";
    case errc::empty_part: return "EmptyPart";
    case errc::empty_set: return "EmptySet";
    case errc::invalid_partition: return "InvalidPartition";
    case errc::not_regular: return "NotRegular";
    case errc::enumeration_too_large: return "EnumerationTooLarge";
    case errc::zero_function: return "ZeroFunction";
    case errc::convergence_failure: return "ConvergenceFailure";
    case errc::not_automorphisms: return "NotAutomorphisms";
    case errc::realizer_not_optimal: return "RealizerNotOptimal";
    case errc::dichotomy_violation: return "DichotomyViolation";
    case errc::uniqueness_violation: return "UniquenessViolation";
    case errc::internal_invariant: return "InternalInvariant";
    case errc::not_full_degree: return "NotFullDegree";
    case errc::degenerate_level_set: return "DegenerateLevelSet";
    case errc::not_connected: return "NotConnected";
    case errc::matching_incomplete: return "MatchingIncomplete";
    case errc::not_edge_transitive: return "NotEdgeTransitive";
    case errc::divide_by_zero: return "DivideByZero";
    case errc::arithmetic_overflow: return "ArithmeticOverflow";
    case errc::unknown_family: return "UnknownFamily";
  }
  return "Unknown";
}

}  // namespace mwiso
