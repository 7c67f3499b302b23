#pragma once

// Independent reference implementations used only by tests. Everything here
// works from plain edge lists and exhaustive enumeration, with none of the
// bitset/branch-and-bound machinery of the library under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "mwiso/graph.hpp"
#include "mwiso/perm.hpp"

namespace oracle {

struct minmax_result {
  std::uint64_t num = 0, den = 1;
  std::vector<int> labels;
};

inline bool frac_lt(std::uint64_t an, std::uint64_t ad, std::uint64_t bn, std::uint64_t bd) {
  return static_cast<unsigned __int128>(an) * bd < static_cast<unsigned __int128>(bn) * ad;
}

// boundary sizes straight from the edge list
inline std::uint64_t edge_boundary_of(const mwiso::graph& g, const std::vector<int>& labels,
                                      int part) {
  std::uint64_t c = 0;
  for (auto [u, v] : g.edge_list()) {
    bool iu = labels[static_cast<std::size_t>(u)] == part;
    bool iv = labels[static_cast<std::size_t>(v)] == part;
    if (iu != iv) ++c;
  }
  return c;
}

inline std::uint64_t vertex_boundary_of(const mwiso::graph& g, const std::vector<int>& labels,
                                        int part) {
  std::set<int> touched;
  for (auto [u, v] : g.edge_list()) {
    bool iu = labels[static_cast<std::size_t>(u)] == part;
    bool iv = labels[static_cast<std::size_t>(v)] == part;
    if (iu != iv) {
      touched.insert(u);
      touched.insert(v);
    }
  }
  return touched.size();
}

/// Unpruned minimum over all partitions of V into exactly n non-empty parts,
/// enumerated as restricted growth strings in lexicographic order; the first
/// minimizer encountered is kept.
inline minmax_result minmax_partition(const mwiso::graph& g, int n, bool vertex_mode) {
  int nv = g.num_vertices;
  std::vector<int> labels(static_cast<std::size_t>(nv), -1);
  minmax_result best;
  bool have = false;

  auto evaluate = [&] {
    std::uint64_t bn = 0, bd = 1;
    for (int p = 0; p < n; ++p) {
      std::uint64_t size = 0;
      for (int v = 0; v < nv; ++v)
        if (labels[static_cast<std::size_t>(v)] == p) ++size;
      std::uint64_t bound =
          vertex_mode ? vertex_boundary_of(g, labels, p) : edge_boundary_of(g, labels, p);
      if (frac_lt(bn, bd, bound, size)) {
        bn = bound;
        bd = size;
      }
    }
    if (!have || frac_lt(bn, bd, best.num, best.den)) {
      have = true;
      best.num = bn;
      best.den = bd;
      best.labels = labels;
    }
  };

  auto rec = [&](auto&& self, int v, int used) -> void {
    if (v == nv) {
      if (used == n) evaluate();
      return;
    }
    int top = std::min(used, n - 1);
    for (int p = 0; p <= top; ++p) {
      labels[static_cast<std::size_t>(v)] = p;
      self(self, v + 1, used + (p == used ? 1 : 0));
    }
    labels[static_cast<std::size_t>(v)] = -1;
  };
  rec(rec, 0, 0);
  return best;
}

/// Unpruned minimum over all collections of n non-empty disjoint subsets
/// (label 0 = unused), plain odometer over (n+1)^V states, no symmetry
/// reduction. Returns the unnormalized max |∂S|/|S| or |δS|/|S|.
inline minmax_result minmax_collection(const mwiso::graph& g, int n, bool vertex_mode) {
  int nv = g.num_vertices;
  std::vector<int> state(static_cast<std::size_t>(nv), 0);  // 0 unused, 1..n parts
  minmax_result best;
  bool have = false;
  for (;;) {
    bool all_nonempty = true;
    for (int p = 1; p <= n && all_nonempty; ++p)
      if (std::count(state.begin(), state.end(), p) == 0) all_nonempty = false;
    if (all_nonempty) {
      std::vector<int> labels(static_cast<std::size_t>(nv));
      for (int v = 0; v < nv; ++v) labels[static_cast<std::size_t>(v)] = state[static_cast<std::size_t>(v)] - 1;
      std::uint64_t bn = 0, bd = 1;
      for (int p = 0; p < n; ++p) {
        std::uint64_t size = static_cast<std::uint64_t>(
            std::count(labels.begin(), labels.end(), p));
        std::uint64_t bound =
            vertex_mode ? vertex_boundary_of(g, labels, p) : edge_boundary_of(g, labels, p);
        if (frac_lt(bn, bd, bound, size)) {
          bn = bound;
          bd = size;
        }
      }
      if (!have || frac_lt(bn, bd, best.num, best.den)) {
        have = true;
        best.num = bn;
        best.den = bd;
        best.labels = labels;
      }
    }
    int i = nv - 1;
    while (i >= 0 && state[static_cast<std::size_t>(i)] == n) {
      state[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++state[static_cast<std::size_t>(i)];
  }
  return best;
}

/// Every permutation of the vertex set that maps edges onto edges; V <= 8.
inline std::vector<mwiso::perm> all_automorphisms(const mwiso::graph& g) {
  std::vector<int> img(static_cast<std::size_t>(g.num_vertices));
  std::iota(img.begin(), img.end(), 0);
  auto edges = g.edge_list();
  std::set<std::pair<int, int>> eset(edges.begin(), edges.end());
  std::vector<mwiso::perm> out;
  do {
    bool ok = true;
    for (auto [u, v] : edges) {
      int a = img[static_cast<std::size_t>(u)], b = img[static_cast<std::size_t>(v)];
      if (!eset.count({std::min(a, b), std::max(a, b)})) {
        ok = false;
        break;
      }
    }
    if (ok) out.emplace_back(std::vector<int>(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

/// All partitions of the domain into exactly n parts that every group element
/// (not just the generators) permutes blockwise; domain <= 8.
inline std::vector<std::vector<int>> all_block_systems(const mwiso::perm_group& gr, int n) {
  int nv = gr.domain;
  std::vector<int> labels(static_cast<std::size_t>(nv), -1);
  std::vector<std::vector<int>> found;

  auto blockwise = [&]() {
    for (const auto& e : gr.elements) {
      for (int p = 0; p < n; ++p) {
        // image of part p must be a single part
        int target = -1;
        for (int v = 0; v < nv; ++v) {
          if (labels[static_cast<std::size_t>(v)] != p) continue;
          int t = labels[static_cast<std::size_t>(e[v])];
          if (target < 0) target = t;
          if (t != target) return false;
        }
        // sizes must match too (images could land inside a bigger part)
        std::size_t src = 0, dst = 0;
        for (int v = 0; v < nv; ++v) {
          if (labels[static_cast<std::size_t>(v)] == p) ++src;
          if (labels[static_cast<std::size_t>(v)] == target) ++dst;
        }
        if (src != dst) return false;
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, int v, int used) -> void {
    if (v == nv) {
      if (used == n && blockwise()) found.push_back(labels);
      return;
    }
    int top = std::min(used, n - 1);
    for (int p = 0; p <= top; ++p) {
      labels[static_cast<std::size_t>(v)] = p;
      self(self, v + 1, used + (p == used ? 1 : 0));
    }
    labels[static_cast<std::size_t>(v)] = -1;
  };
  rec(rec, 0, 0);
  return found;
}

/// Orders of all subgroups, found as closures of every generating set of size
/// at most 4 (enough for any subgroup of a group of order <= 24).
inline std::set<std::size_t> subgroup_orders(const mwiso::perm_group& gr) {
  std::size_t m = gr.order();
  auto close = [&](std::vector<int> seed) {
    std::set<int> members(seed.begin(), seed.end());
    members.insert(gr.element_index(mwiso::perm::identity(gr.domain)));
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(members.begin(), members.end());
      for (int a : cur)
        for (int b : cur) {
          int ab = gr.element_index(gr.elements[static_cast<std::size_t>(a)].compose(
              gr.elements[static_cast<std::size_t>(b)]));
          if (members.insert(ab).second) grew = true;
        }
    }
    return members.size();
  };

  std::set<std::size_t> orders;
  orders.insert(1);
  for (std::size_t a = 0; a < m; ++a) {
    orders.insert(close({static_cast<int>(a)}));
    for (std::size_t b = a + 1; b < m; ++b) {
      orders.insert(close({static_cast<int>(a), static_cast<int>(b)}));
      for (std::size_t c = b + 1; c < m; ++c) {
        orders.insert(close({static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)}));
        for (std::size_t d = c + 1; d < m; ++d)
          orders.insert(close({static_cast<int>(a), static_cast<int>(b), static_cast<int>(c),
                               static_cast<int>(d)}));
      }
    }
  }
  return orders;
}

/// Hall condition |N(K) \ B| >= |K| for every non-empty K inside the block.
inline bool hall_condition(const mwiso::graph& g, const mwiso::vset& block) {
  auto verts = block.to_vector();
  for (std::uint32_t mask = 1; mask < (1u << verts.size()); ++mask) {
    mwiso::vset k;
    for (std::size_t t = 0; t < verts.size(); ++t)
      if (mask & (1u << t)) k.set(verts[t]);
    mwiso::vset nbrs;
    k.for_each([&](int v) {
      nbrs = nbrs | (g.adj_bits[static_cast<std::size_t>(v)] - block);
    });
    if (nbrs.count() < k.count()) return false;
  }
  return true;
}

}  // namespace oracle
