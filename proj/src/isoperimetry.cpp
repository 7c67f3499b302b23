#include "mwiso/isoperimetry.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <thread>

namespace mwiso {

const char* quantity_name(quantity q) {
  switch (q) {
    case quantity::h: return "h";
    case quantity::iota: return "iota";
    case quantity::rho: return "rho";
    case quantity::iota_tilde: return "iota_tilde";
  }
  return "?";
}

unsigned worker_count(unsigned requested) {
  if (requested) return requested;
  if (const char* env = std::getenv("MWISO_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

std::uint64_t stirling_estimate(int v, int n) {
  constexpr std::uint64_t cap = 1ULL << 63;
  if (n < 0 || n > v) return 0;
  if (n == 0) return v == 0 ? 1 : 0;
  std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;  // S(0,0)
  for (int i = 1; i <= v; ++i) {
    for (int j = std::min(i, n); j >= 1; --j) {
      std::uint64_t a = row[static_cast<std::size_t>(j)];
      std::uint64_t b = row[static_cast<std::size_t>(j - 1)];
      std::uint64_t s;
      if (a > cap / static_cast<std::uint64_t>(j)) {
        s = cap;
      } else {
        s = a * static_cast<std::uint64_t>(j);
        s = (s > cap - b) ? cap : s + b;
      }
      row[static_cast<std::size_t>(j)] = s;
    }
    row[0] = 0;  // S(i,0) = 0 for i >= 1
  }
  return row[static_cast<std::size_t>(n)];
}

static std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  constexpr std::uint64_t cap = 1ULL << 63;
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > cap / base) return cap;
    out *= base;
  }
  return out;
}

partition iso_result::realizer() const {
  if (q != quantity::h && q != quantity::iota)
    throw error(errc::invalid_partition, "collection result has no partition realizer");
  return partition(assignment, n);
}

ratio partition_ratio(const graph& g, const partition& p, quantity q) {
  if (q != quantity::h && q != quantity::iota)
    throw error(errc::param_out_of_range, "partition_ratio takes h or iota");
  if (p.size() != g.num_vertices)
    throw error(errc::domain_mismatch, "partition size vs graph");
  ratio best;
  for (const auto& part : p.part_sets()) {
    if (part.empty()) throw error(errc::empty_part, "partition has an empty part");
    int boundary = (q == quantity::h) ? edge_boundary_all(g, part) : vertex_boundary_all(g, part);
    ratio r(static_cast<std::uint64_t>(boundary), static_cast<std::uint64_t>(part.count()));
    if (best < r) best = r;
  }
  return best;
}

namespace {

using u128 = unsigned __int128;

struct frac {
  std::uint64_t num = 0, den = 1;
};

inline bool frac_less(const frac& a, const frac& b) {
  return static_cast<u128>(a.num) * b.den < static_cast<u128>(b.num) * a.den;
}

struct best_value {
  bool has = false;
  frac value;
  std::vector<int> labels;
};

struct shared_best {
  std::mutex m;
  bool has = false;
  frac value;

  void offer(const frac& v) {
    std::lock_guard<std::mutex> lock(m);
    if (!has || frac_less(v, value)) {
      has = true;
      value = v;
    }
  }
  std::pair<bool, frac> snapshot() {
    std::lock_guard<std::mutex> lock(m);
    return {has, value};
  }
};

/// One exhaustive search over canonical label strings. `allow_unused` switches
/// between exact partitions (restricted-growth strings) and collections of n
/// disjoint subsets with an extra non-symmetric "unused" label. Boundary
/// counts are maintained incrementally with an undo journal so the bound at a
/// node costs O(parts).
struct searcher {
  const graph& g;
  int nverts;
  int nparts;
  bool vertex_mode;   // symmetric vertex boundary instead of edge boundary
  bool allow_unused;

  std::vector<vset> parts;
  std::vector<int> sizes;
  vset assigned;
  std::vector<int> labels;  // canonical label per vertex; -1 below depth
  int used = 0;             // non-empty parts so far

  // committed[i] underestimates the final boundary of part i and is exact at
  // the leaves; in vertex mode marks[0/1][i] record which vertices have been
  // counted on the inside/outside
  std::vector<std::uint32_t> committed;
  std::vector<vset> marks[2];
  struct journal_entry {
    std::int32_t part;
    std::int32_t vertex;   // -1: plain delta (edge mode)
    std::uint32_t delta;
    std::int8_t side;      // vertex mode: 0 inside, 1 outside
  };
  std::vector<journal_entry> journal;
  std::vector<std::size_t> journal_marks;

  best_value local;
  bool has_global = false;
  frac global;

  searcher(const graph& gr, int n, bool vmode, bool unused)
      : g(gr),
        nverts(gr.num_vertices),
        nparts(n),
        vertex_mode(vmode),
        allow_unused(unused),
        parts(static_cast<std::size_t>(n)),
        sizes(static_cast<std::size_t>(n), 0),
        labels(static_cast<std::size_t>(gr.num_vertices), -1),
        committed(static_cast<std::size_t>(n), 0) {
    marks[0].assign(static_cast<std::size_t>(n), vset{});
    marks[1].assign(static_cast<std::size_t>(n), vset{});
  }

  bool prune(int depth) const {
    // still-empty parts reserve one unassigned vertex each
    std::uint64_t slack = static_cast<std::uint64_t>(nverts - depth - (nparts - used));
    for (int i = 0; i < used; ++i) {
      frac bound{committed[static_cast<std::size_t>(i)],
                 static_cast<std::uint64_t>(sizes[static_cast<std::size_t>(i)]) + slack};
      if (has_global && frac_less(global, bound)) return true;
      if (local.has && !frac_less(bound, local.value)) return true;
    }
    return false;
  }

  void leaf() {
    if (used != nparts) return;
    frac value{0, 1};
    for (int i = 0; i < nparts; ++i) {
      frac r{committed[static_cast<std::size_t>(i)],
             static_cast<std::uint64_t>(sizes[static_cast<std::size_t>(i)])};
      if (frac_less(value, r)) value = r;
    }
    if (!local.has || frac_less(value, local.value)) {
      local.has = true;
      local.value = value;
      local.labels = labels;
    }
  }

  void bump_edge(int part, std::uint32_t delta) {
    if (delta == 0) return;
    committed[static_cast<std::size_t>(part)] += delta;
    journal.push_back({part, -1, delta, 0});
  }

  void bump_vertex(int part, int side, int vertex) {
    vset& m = marks[side][static_cast<std::size_t>(part)];
    if (m.test(vertex)) return;
    m.set(vertex);
    committed[static_cast<std::size_t>(part)] += 1;
    journal.push_back({part, vertex, 1, static_cast<std::int8_t>(side)});
  }

  void assign(int v, int label) {
    journal_marks.push_back(journal.size());
    labels[static_cast<std::size_t>(v)] = label;
    assigned.set(v);
    if (label >= 0) {
      if (sizes[static_cast<std::size_t>(label)] == 0) ++used;
      parts[static_cast<std::size_t>(label)].set(v);
      ++sizes[static_cast<std::size_t>(label)];
    }
    const vset& nbrs = g.adj_bits[static_cast<std::size_t>(v)];

    if (!vertex_mode) {
      if (label >= 0) {
        vset outside = assigned - parts[static_cast<std::size_t>(label)];
        bump_edge(label, static_cast<std::uint32_t>((nbrs & outside).count()));
      }
      for (int q = 0; q < used; ++q) {
        if (q == label) continue;
        bump_edge(q, static_cast<std::uint32_t>((nbrs & parts[static_cast<std::size_t>(q)]).count()));
      }
    } else {
      if (label >= 0) {
        vset outside = assigned - parts[static_cast<std::size_t>(label)];
        if (nbrs.intersects(outside)) bump_vertex(label, 0, v);
      }
      for (int q = 0; q < used; ++q) {
        if (q == label) continue;
        if (nbrs.intersects(parts[static_cast<std::size_t>(q)])) bump_vertex(q, 1, v);
      }
      // previously assigned neighbors gain v as a boundary witness
      (nbrs & assigned).for_each([&](int u) {
        if (u == v) return;
        int lu = labels[static_cast<std::size_t>(u)];
        if (lu >= 0 && lu != label) bump_vertex(lu, 0, u);
        if (label >= 0 && lu != label) bump_vertex(label, 1, u);
      });
    }
  }

  void unassign(int v, int label) {
    std::size_t mark = journal_marks.back();
    journal_marks.pop_back();
    while (journal.size() > mark) {
      const journal_entry& e = journal.back();
      committed[static_cast<std::size_t>(e.part)] -= e.delta;
      if (e.vertex >= 0) marks[e.side][static_cast<std::size_t>(e.part)].reset(e.vertex);
      journal.pop_back();
    }
    labels[static_cast<std::size_t>(v)] = -1;
    assigned.reset(v);
    if (label >= 0) {
      parts[static_cast<std::size_t>(label)].reset(v);
      --sizes[static_cast<std::size_t>(label)];
      if (sizes[static_cast<std::size_t>(label)] == 0) --used;
    }
  }

  template <class F>
  void for_each_candidate(int depth, F body) {
    int remaining = nverts - depth;
    if (allow_unused) {
      // unused first: lexicographically least label
      if (used + (remaining - 1) >= nparts) body(-1);
      int top = std::min(used, nparts - 1);
      for (int p = 0; p <= top; ++p) {
        int used2 = used + (p == used ? 1 : 0);
        if (used2 + (remaining - 1) >= nparts) body(p);
      }
    } else {
      int top = std::min(used, nparts - 1);
      for (int p = 0; p <= top; ++p) {
        int used2 = used + (p == used ? 1 : 0);
        if (used2 + (remaining - 1) >= nparts) body(p);
      }
    }
  }

  void dfs(int depth) {
    if (depth == nverts) {
      leaf();
      return;
    }
    for_each_candidate(depth, [&](int p) {
      assign(depth, p);
      if (!prune(depth + 1)) dfs(depth + 1);
      unassign(depth, p);
    });
  }

  /// Canonical feasible prefixes of the given depth, in lexicographic order.
  static std::vector<std::vector<int>> prefixes(const graph& gr, int n, bool unused, int depth) {
    searcher s(gr, n, false, unused);
    std::vector<std::vector<int>> out;
    struct rec {
      searcher& s;
      int depth;
      std::vector<std::vector<int>>& out;
      void go(int d) {
        if (d == depth) {
          out.emplace_back(s.labels.begin(), s.labels.begin() + depth);
          return;
        }
        s.for_each_candidate(d, [&](int p) {
          s.assign(d, p);
          go(d + 1);
          s.unassign(d, p);
        });
      }
    };
    rec{s, depth, out}.go(0);
    return out;
  }
};

iso_result run_search(const graph& g, int n, quantity q, const enum_options& opt) {
  bool vertex_mode = (q == quantity::iota || q == quantity::iota_tilde);
  bool allow_unused = (q == quantity::rho || q == quantity::iota_tilde);

  unsigned threads = worker_count(opt.threads);

  // pick a prefix depth giving enough chunks to spread
  int depth = 0;
  std::vector<std::vector<int>> chunks = {{}};
  if (threads > 1) {
    while (depth < g.num_vertices && chunks.size() < static_cast<std::size_t>(4 * threads)) {
      ++depth;
      chunks = searcher::prefixes(g, n, allow_unused, depth);
    }
  }

  shared_best shared;
  std::vector<std::optional<best_value>> results(chunks.size());

  auto run_chunk = [&](std::size_t idx) {
    searcher s(g, n, vertex_mode, allow_unused);
    for (int d = 0; d < depth; ++d) s.assign(d, chunks[idx][static_cast<std::size_t>(d)]);
    auto [has, val] = shared.snapshot();
    s.has_global = has;
    s.global = val;
    if (depth > 0 && s.prune(depth)) return;
    s.dfs(depth);
    if (s.local.has) {
      shared.offer(s.local.value);
      results[idx] = std::move(s.local);
    }
  };

  if (threads <= 1 || chunks.size() <= 1) {
    for (std::size_t i = 0; i < chunks.size(); ++i) run_chunk(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= chunks.size()) return;
          run_chunk(i);
        }
      });
    for (auto& th : pool) th.join();
  }

  // merge in chunk (= lexicographic) order: earliest chunk wins ties
  best_value best;
  for (auto& r : results) {
    if (!r) continue;
    if (!best.has || frac_less(r->value, best.value)) best = std::move(*r);
  }
  if (!best.has) throw error(errc::internal_invariant, "search found no assignment");

  iso_result out;
  out.q = q;
  out.n = n;
  out.value = ratio(best.value.num, best.value.den);
  if (q == quantity::rho) {
    out.value = out.value / static_cast<std::uint64_t>(*g.regular_degree);
  }
  out.assignment = std::move(best.labels);
  return out;
}

iso_result partition_search(const graph& g, int n, quantity q, const enum_options& opt) {
  if (n < 1 || n > g.num_vertices)
    throw error(errc::n_out_of_range,
                "n must be in [1, " + std::to_string(g.num_vertices) + "]");
  if (n == 1) {
    iso_result out;
    out.q = q;
    out.n = 1;
    out.value = ratio();
    out.assignment.assign(static_cast<std::size_t>(g.num_vertices), 0);
    return out;
  }
  // With 2n > |V| every partition contains a singleton part, whose ratio
  // (d for edges, d+1 for the symmetric vertex boundary) is also the maximum
  // any part can reach on a regular graph, so every partition realizes the
  // minimum and the lexicographically least RGS wins.
  if (g.regular_degree && 2 * n > g.num_vertices) {
    std::uint64_t d = static_cast<std::uint64_t>(*g.regular_degree);
    iso_result out;
    out.q = q;
    out.n = n;
    out.value = (q == quantity::h) ? ratio::from_int(d)
                                   : (d == 0 ? ratio() : ratio::from_int(d + 1));
    out.assignment.assign(static_cast<std::size_t>(g.num_vertices), 0);
    for (int i = 1; i < n; ++i)
      out.assignment[static_cast<std::size_t>(g.num_vertices - n + i)] = i;
    return out;
  }
  if (stirling_estimate(g.num_vertices, n) > opt.budget)
    throw error(errc::enumeration_too_large,
                "S(" + std::to_string(g.num_vertices) + "," + std::to_string(n) +
                    ") exceeds budget");
  return run_search(g, n, q, opt);
}

iso_result collection_search(const graph& g, int n, quantity q, const enum_options& opt) {
  if (n < 1 || n > g.num_vertices)
    throw error(errc::n_out_of_range,
                "n must be in [1, " + std::to_string(g.num_vertices) + "]");
  if (q == quantity::rho && !g.regular_degree)
    throw error(errc::not_regular, "rho needs a regular graph");
  if (n == 1) {
    iso_result out;  // S_1 = V always achieves 0
    out.q = q;
    out.n = 1;
    out.value = ratio();
    out.assignment.assign(static_cast<std::size_t>(g.num_vertices), 0);
    return out;
  }
  if (saturating_pow(static_cast<std::uint64_t>(n) + 1, g.num_vertices) > opt.budget)
    throw error(errc::enumeration_too_large,
                "(" + std::to_string(n + 1) + ")^" + std::to_string(g.num_vertices) +
                    " exceeds budget");
  return run_search(g, n, q, opt);
}

}  // namespace

iso_result h_n(const graph& g, int n, const enum_options& opt) {
  return partition_search(g, n, quantity::h, opt);
}

iso_result iota_n(const graph& g, int n, const enum_options& opt) {
  return partition_search(g, n, quantity::iota, opt);
}

iso_result rho_n(const graph& g, int n, const enum_options& opt) {
  return collection_search(g, n, quantity::rho, opt);
}

iso_result iota_tilde_n(const graph& g, int n, const enum_options& opt) {
  return collection_search(g, n, quantity::iota_tilde, opt);
}

ratio normalized(const iso_result& r, int d) {
  if (d < 1) throw error(errc::param_out_of_range, "degree must be >= 1");
  return r.value / static_cast<std::uint64_t>(d);
}

}  // namespace mwiso
