#pragma once

#include <vector>

#include "mwiso/graph.hpp"
#include "mwiso/ratio.hpp"
#include "mwiso/vset.hpp"

namespace mwiso {

/// Full spectrum of the combinatorial Laplacian, ascending, with the largest
/// eigenpair residual max ||Lv - λv||₂ as a convergence certificate.
struct spectrum {
  std::vector<double> eigenvalues;
  double residual = 0.0;
};

/// L = D - A as an integer matrix (row-major, n x n). Rows sum to zero.
std::vector<std::vector<int>> laplacian(const graph& g);

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// 1e-12 * ||L||_F (at most 100 sweeps, then ConvergenceFailure).
spectrum eigenvalues(const graph& g);

/// n-th smallest eigenvalue with multiplicity, 1-indexed.
double lambda_n(const spectrum& s, int n);

struct vertex_function {
  std::vector<double> values;
};

/// Sum over edges of |f(u)-f(v)|^2 over the squared l2 norm, unnormalized.
double rayleigh(const graph& g, const vertex_function& f);

struct sweep_result {
  vset set;
  ratio boundary_ratio;  // |δS|/|S|, exact
  double slack;          // 4 Ray(f) - (sqrt(ratio+1)-1)^2
};

/// Threshold-set sweep over the distinct values of |f| on its support,
/// returning the set minimizing |δS|/|S|. The slack is guaranteed >= -1e-9.
sweep_result bht_sweep(const graph& g, const vertex_function& f);

}  // namespace mwiso
