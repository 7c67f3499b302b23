#pragma once

#include <cstdint>
#include <vector>

#include "mwiso/graph.hpp"
#include "mwiso/perm.hpp"
#include "mwiso/ratio.hpp"

namespace mwiso {

enum class quantity { h, iota, rho, iota_tilde };
const char* quantity_name(quantity q);

/// Exact value plus the assignment that realizes it. For h/iota the assignment
/// is a partition (labels 0..n-1); for rho/iota_tilde a vertex may be unused
/// and carries label -1.
struct iso_result {
  quantity q = quantity::h;
  int n = 0;
  ratio value;
  std::vector<int> assignment;

  partition realizer() const;  // h/iota only
};

struct enum_options {
  std::uint64_t budget = 1'000'000'000;  // enumeration-size guard
  unsigned threads = 0;                  // 0 = MWISO_THREADS or hardware
};

/// max over parts of |∂A_i|/|A_i| (h) or |δA_i|/|A_i| (iota), exact.
ratio partition_ratio(const graph& g, const partition& p, quantity q);

/// Exact n-way isoperimetric constant; realizer is the lexicographically least
/// restricted-growth string among the minimizers.
iso_result h_n(const graph& g, int n, const enum_options& opt = {});
iso_result iota_n(const graph& g, int n, const enum_options& opt = {});

/// min over collections of n non-empty disjoint subsets of
/// max |∂S_i|/(d|S_i|); requires regularity.
iso_result rho_n(const graph& g, int n, const enum_options& opt = {});

/// Same relaxation with the symmetric vertex boundary and no degree factor.
iso_result iota_tilde_n(const graph& g, int n, const enum_options& opt = {});

ratio normalized(const iso_result& r, int d);

/// Stirling number of the second kind S(v,n), saturating at 2^63.
std::uint64_t stirling_estimate(int v, int n);

/// Worker-count resolution: explicit > MWISO_THREADS > hardware concurrency.
unsigned worker_count(unsigned requested);

}  // namespace mwiso
