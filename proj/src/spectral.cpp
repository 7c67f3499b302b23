#include "mwiso/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace mwiso {

std::vector<std::vector<int>> laplacian(const graph& g) {
  int n = g.num_vertices;
  std::vector<std::vector<int>> l(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int v = 0; v < n; ++v) {
    l[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] =
        g.degree_sequence[static_cast<std::size_t>(v)];
    for (int u : g.adjacency[static_cast<std::size_t>(v)])
      l[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = -1;
  }
  return l;
}

spectrum eigenvalues(const graph& g) {
  int n = g.num_vertices;
  auto li = laplacian(g);
  std::vector<std::vector<double>> a(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n)));
  std::vector<std::vector<double>> v(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n), 0.0));
  double frob = 0.0;
  for (int i = 0; i < n; ++i) {
    v[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
    for (int j = 0; j < n; ++j) {
      double x = static_cast<double>(li[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x;
      frob += x * x;
    }
  }
  frob = std::sqrt(frob);
  double tol = 1e-12 * frob;

  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        s += 2.0 * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
             a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return std::sqrt(s);
  };

  int sweeps = 0;
  while (n > 1 && off_norm() > tol) {
    if (++sweeps > 100)
      throw error(errc::convergence_failure, "Jacobi did not converge in 100 sweeps");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
        if (apq == 0.0) continue;
        double app = a[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)];
        double aqq = a[static_cast<std::size_t>(q)][static_cast<std::size_t>(q)];
        double theta = (aqq - app) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)];
          double akq = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(q)];
          a[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)] = c * akp - s * akq;
          a[static_cast<std::size_t>(k)][static_cast<std::size_t>(q)] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)];
          double aqk = a[static_cast<std::size_t>(q)][static_cast<std::size_t>(k)];
          a[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)] = c * apk - s * aqk;
          a[static_cast<std::size_t>(q)][static_cast<std::size_t>(k)] = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = v[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)];
          double vkq = v[static_cast<std::size_t>(k)][static_cast<std::size_t>(q)];
          v[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)] = c * vkp - s * vkq;
          v[static_cast<std::size_t>(k)][static_cast<std::size_t>(q)] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return a[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] <
           a[static_cast<std::size_t>(y)][static_cast<std::size_t>(y)];
  });

  spectrum out;
  out.eigenvalues.reserve(static_cast<std::size_t>(n));
  double worst = 0.0;
  for (int idx : order) {
    double lam = a[static_cast<std::size_t>(idx)][static_cast<std::size_t>(idx)];
    out.eigenvalues.push_back(lam);
    // residual ||L x - lam x|| for the accumulated eigenvector column
    double norm2 = 0.0;
    for (int r = 0; r < n; ++r) {
      double lx = 0.0;
      for (int cidx = 0; cidx < n; ++cidx)
        lx += static_cast<double>(li[static_cast<std::size_t>(r)][static_cast<std::size_t>(cidx)]) *
              v[static_cast<std::size_t>(cidx)][static_cast<std::size_t>(idx)];
      double diff = lx - lam * v[static_cast<std::size_t>(r)][static_cast<std::size_t>(idx)];
      norm2 += diff * diff;
    }
    worst = std::max(worst, std::sqrt(norm2));
  }
  out.residual = worst;
  return out;
}

double lambda_n(const spectrum& s, int n) {
  if (n < 1 || static_cast<std::size_t>(n) > s.eigenvalues.size())
    throw error(errc::n_out_of_range, "eigenvalue index");
  return s.eigenvalues[static_cast<std::size_t>(n - 1)];
}

double rayleigh(const graph& g, const vertex_function& f) {
  if (f.values.size() != static_cast<std::size_t>(g.num_vertices))
    throw error(errc::domain_mismatch, "function size vs graph");
  double den = 0.0;
  for (double x : f.values) den += x * x;
  if (den == 0.0) throw error(errc::zero_function, "rayleigh of the zero function");
  double num = 0.0;
  for (auto [u, w] : g.edge_list()) {
    double d = f.values[static_cast<std::size_t>(u)] - f.values[static_cast<std::size_t>(w)];
    num += d * d;
  }
  return num / den;
}

sweep_result bht_sweep(const graph& g, const vertex_function& f) {
  if (f.values.size() != static_cast<std::size_t>(g.num_vertices))
    throw error(errc::domain_mismatch, "function size vs graph");
  std::set<double, std::greater<double>> thresholds;
  for (double x : f.values)
    if (x != 0.0) thresholds.insert(std::abs(x));
  if (thresholds.empty()) throw error(errc::zero_function, "sweep of the zero function");

  double ray = rayleigh(g, f);

  bool have = false;
  sweep_result best;
  for (double t : thresholds) {
    vset s;
    for (int vtx = 0; vtx < g.num_vertices; ++vtx)
      if (std::abs(f.values[static_cast<std::size_t>(vtx)]) >= t) s.set(vtx);
    ratio r(static_cast<std::uint64_t>(vertex_boundary_all(g, s)),
            static_cast<std::uint64_t>(s.count()));
    if (!have || r < best.boundary_ratio) {
      have = true;
      best.set = s;
      best.boundary_ratio = r;
    }
  }
  double root = std::sqrt(best.boundary_ratio.to_double() + 1.0) - 1.0;
  best.slack = 4.0 * ray - root * root;
  if (best.slack < -1e-9)
    throw error(errc::internal_invariant, "threshold sweep slack below tolerance");
  return best;
}

}  // namespace mwiso
