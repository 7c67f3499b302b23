#include "mwiso/imprimitivity.hpp"

#include <algorithm>
#include <set>

namespace mwiso {

coset_class_table coset_classes(const phi_result& phi, const perm_group& group) {
  int n = static_cast<int>(phi.parts.size());
  if (phi.l != n)
    throw error(errc::not_full_degree, "induced degree l = " + std::to_string(phi.l) +
                                           " < n = " + std::to_string(n));
  if (!phi.induced_transitive)
    throw error(errc::not_transitive, "induced action on [n] is not transitive");
  if (phi.sigma.size() != group.order())
    throw error(errc::domain_mismatch, "phi table vs group");

  coset_class_table out;
  out.n = n;
  out.members.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), {});
  for (std::size_t gi = 0; gi < phi.sigma.size(); ++gi)
    for (int j = 0; j < n; ++j)
      out.members[static_cast<std::size_t>(phi.sigma[gi][j]) * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(j)]
          .push_back(static_cast<int>(gi));

  std::size_t expect = group.order() / static_cast<std::size_t>(n);
  for (const auto& cls : out.members)
    if (cls.size() != expect)
      throw error(errc::internal_invariant, "coset class size differs from |G|/n");

  // spot-check the composition rule G_{i,j} G_{j,k} ⊆ G_{i,k}
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int a = out.cls(i, j).front();
        int b = out.cls(j, k).front();
        perm prod = group.elements[static_cast<std::size_t>(a)].compose(
            group.elements[static_cast<std::size_t>(b)]);
        int pi = group.element_index(prod);
        if (pi < 0 || phi.sigma[static_cast<std::size_t>(pi)][k] != i)
          throw error(errc::internal_invariant, "coset composition rule fails");
      }
  return out;
}

std::vector<averaged_function> averaged_functions(const gap_instance& inst,
                                                  const phi_result& phi) {
  const int n = inst.n;
  if (phi.l != n) throw error(errc::not_full_degree, "averaging needs l = n");
  const auto& elems = inst.group.elements;
  const std::size_t m = elems.size();
  const int nv = inst.g.num_vertices;

  // counts[i][v] = |{ g : g^{-1} v ∈ A_{sigma_g^{-1}(i)} }|, so zeta_i = counts_i/|G|
  std::vector<std::vector<std::uint64_t>> counts(
      static_cast<std::size_t>(n), std::vector<std::uint64_t>(static_cast<std::size_t>(nv), 0));
  for (std::size_t gi = 0; gi < m; ++gi) {
    perm ginv = elems[gi].inverse();
    perm sinv = phi.sigma[gi].inverse();
    for (int i = 0; i < n; ++i) {
      const vset& src = phi.parts[static_cast<std::size_t>(sinv[i])];
      for (int v = 0; v < nv; ++v)
        if (src.test(ginv[v])) ++counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
    }
  }

  // claim: the zetas form an exact partition of unity
  for (int v = 0; v < nv; ++v) {
    std::uint64_t total = 0;
    for (int i = 0; i < n; ++i)
      total += counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
    if (total != m)
      throw error(errc::internal_invariant, "zetas do not sum to one");
  }

  // claim: translating zeta_j by any g in G_{i,j} gives exactly zeta_i
  for (std::size_t gi = 0; gi < m; ++gi) {
    perm ginv = elems[gi].inverse();
    for (int j = 0; j < n; ++j) {
      int i = phi.sigma[gi][j];
      for (int v = 0; v < nv; ++v)
        if (counts[static_cast<std::size_t>(j)][static_cast<std::size_t>(ginv[v])] !=
            counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)])
          throw error(errc::internal_invariant, "zeta translation invariance fails");
    }
  }

  // claim: l1 distance to the indicator is controlled by the closeness bound
  std::uint64_t s0 = static_cast<std::uint64_t>(phi.parts[0].count());
  ratio l1_bound = ratio(static_cast<std::uint64_t>(n - 1), static_cast<std::uint64_t>(n)) *
                   ((inst.low / inst.high) * 4) * s0;
  std::vector<averaged_function> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::uint64_t t = 0;
    for (int v = 0; v < nv; ++v) {
      std::uint64_t c = counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
      t += phi.parts[static_cast<std::size_t>(i)].test(v) ? (m - c) : c;
    }
    if (l1_bound < ratio(t, m))
      throw error(errc::internal_invariant, "averaged function strays from its indicator");

    averaged_function f;
    f.part = i;
    f.values.reserve(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v)
      f.values.emplace_back(counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)], m);
    out.push_back(std::move(f));
  }
  return out;
}

block_system level_set_blocks(const std::vector<averaged_function>& zetas) {
  if (zetas.empty()) throw error(errc::empty_set, "no averaged functions");
  int n = static_cast<int>(zetas.size());
  int nv = static_cast<int>(zetas[0].values.size());
  ratio half(1, 2);

  std::vector<int> labels(static_cast<std::size_t>(nv), -1);
  for (int v = 0; v < nv; ++v) {
    for (int i = 0; i < n; ++i) {
      const ratio& z = zetas[static_cast<std::size_t>(i)].values[static_cast<std::size_t>(v)];
      if (z == half)
        throw error(errc::degenerate_level_set,
                    "zeta exactly 1/2 at vertex " + std::to_string(v));
      if (half < z) {
        if (labels[static_cast<std::size_t>(v)] >= 0)
          throw error(errc::internal_invariant, "two level sets claim one vertex");
        labels[static_cast<std::size_t>(v)] = i;
      }
    }
    if (labels[static_cast<std::size_t>(v)] < 0)
      throw error(errc::degenerate_level_set,
                  "no level set covers vertex " + std::to_string(v));
  }
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (int p : labels) seen[static_cast<std::size_t>(p)] = 1;
  for (int i = 0; i < n; ++i)
    if (!seen[static_cast<std::size_t>(i)])
      throw error(errc::degenerate_level_set, "empty block " + std::to_string(i));
  return block_system{partition(std::move(labels), n)};
}

imprimitivity_certificate build_certificate(const gap_instance& inst, const phi_result& phi) {
  const int n = inst.n;
  if (phi.l != n) throw error(errc::not_full_degree, "certificate needs l = n");

  // re-verify the instance and phi instead of trusting them
  ratio threshold = inst.low * static_cast<std::uint64_t>(2 * (n + 1));
  if (!(threshold < inst.high))
    throw error(errc::internal_invariant, "gap hypothesis does not hold");
  quantity q = inst.mode == iso_mode::h ? quantity::h : quantity::iota;
  if (!(partition_ratio(inst.g, inst.realizer, q) == inst.low))
    throw error(errc::realizer_not_optimal, "realizer does not achieve the constant");
  coset_classes(phi, inst.group);

  auto zetas = averaged_functions(inst, phi);

  // two-sided value gap: every zeta value is near 0 or near 1
  std::uint64_t nn = static_cast<std::uint64_t>(n);
  ratio c = ratio(nn * nn - 1, nn * nn + 1) * ((inst.low / inst.high) * 4);
  ratio one = ratio::from_int(1);
  for (const auto& f : zetas)
    for (const ratio& z : f.values) {
      bool low_side = z <= c;
      bool high_side = (c < one) ? (ratio::sub(one, c) <= z) : true;
      if (!low_side && !high_side)
        throw error(errc::internal_invariant, "zeta value escapes the two-sided gap");
    }

  block_system blocks = level_set_blocks(zetas);
  bool a = is_block_system(inst.group, blocks.blocks);
  if (!a) throw error(errc::internal_invariant, "level sets are not a block system");

  // realizer restated in the phi label order so V_i pairs with A_i
  std::vector<int> relabeled(static_cast<std::size_t>(inst.g.num_vertices));
  for (int v = 0; v < inst.g.num_vertices; ++v)
    relabeled[static_cast<std::size_t>(v)] =
        phi.reindex[inst.realizer.part_of[static_cast<std::size_t>(v)]];
  partition realizer(std::move(relabeled), n);
  bool b = partition_ratio(inst.g, realizer, q) == inst.low;
  if (!b) throw error(errc::internal_invariant, "relabeled realizer changed value");

  imprimitivity_certificate cert;
  cert.blocks = blocks;
  cert.realizer = realizer;
  cert.bound = ((inst.low / inst.high) * 4) * static_cast<std::uint64_t>(inst.g.num_vertices);
  auto vsets = blocks.blocks.part_sets();
  bool cpass = true;
  for (int i = 0; i < n; ++i) {
    int diff = (vsets[static_cast<std::size_t>(i)] ^ phi.parts[static_cast<std::size_t>(i)]).count();
    cert.sym_diffs.push_back(diff);
    if (cert.bound < ratio::from_int(static_cast<std::uint64_t>(diff))) cpass = false;
  }
  if (!cpass)
    throw error(errc::internal_invariant, "symmetric difference exceeds the bound");
  cert.check_a = a;
  cert.check_b = b;
  cert.check_c = cpass;
  return cert;
}

ordered_json certificate_json(const imprimitivity_certificate& cert) {
  ordered_json j;
  j["blocks"] = cert.blocks.blocks.part_of;
  j["realizer"] = cert.realizer.part_of;
  j["sym_diffs"] = cert.sym_diffs;
  j["bound"] = ordered_json{{"num", cert.bound.num()}, {"den", cert.bound.den()}};
  j["checks"] =
      ordered_json{{"a", cert.check_a}, {"b", cert.check_b}, {"c", cert.check_c}};
  return j;
}

std::vector<std::pair<int, int>> hall_matching(const graph& g, const block_system& blocks,
                                               int block_index) {
  if (!is_connected(g)) throw error(errc::not_connected, "matching needs a connected graph");
  if (block_index < 0 || block_index >= blocks.block_count())
    throw error(errc::param_out_of_range, "block index");

  auto sets = blocks.blocks.part_sets();
  std::vector<int> left = sets[static_cast<std::size_t>(block_index)].to_vector();
  vset outside = g.vertex_set() - sets[static_cast<std::size_t>(block_index)];

  std::vector<int> match_of(static_cast<std::size_t>(g.num_vertices), -1);  // right -> left
  std::vector<char> visited;

  // deterministic Kuhn augmenting search, neighbors in ascending order
  auto augment = [&](auto&& self, int v) -> bool {
    for (int w : g.adjacency[static_cast<std::size_t>(v)]) {
      if (!outside.test(w) || visited[static_cast<std::size_t>(w)]) continue;
      visited[static_cast<std::size_t>(w)] = 1;
      if (match_of[static_cast<std::size_t>(w)] < 0 ||
          self(self, match_of[static_cast<std::size_t>(w)])) {
        match_of[static_cast<std::size_t>(w)] = v;
        return true;
      }
    }
    return false;
  };

  for (int v : left) {
    visited.assign(static_cast<std::size_t>(g.num_vertices), 0);
    if (!augment(augment, v))
      throw error(errc::matching_incomplete,
                  "no full matching out of block " + std::to_string(block_index));
  }

  std::vector<std::pair<int, int>> out;
  for (int w = 0; w < g.num_vertices; ++w)
    if (match_of[static_cast<std::size_t>(w)] >= 0)
      out.emplace_back(match_of[static_cast<std::size_t>(w)], w);
  std::sort(out.begin(), out.end());
  return out;
}

check_report successive_bound_check(const graph& g, const perm_group& group, int n, iso_mode mode,
                                const enum_options& opt) {
  if (!is_connected(g)) throw error(errc::not_connected, "main inequality needs connectivity");
  if (!is_transitive(group)) throw error(errc::not_transitive, "action is not transitive");
  for (const auto& p : group.generators)
    if (!is_automorphism(g, p))
      throw error(errc::not_automorphisms, "generator is not an automorphism");
  if (n < 2 || n > g.num_vertices - 1)
    throw error(errc::n_out_of_range, "need 2 <= n <= |V|-1");

  check_report rep;
  rep.check_id = mode == iso_mode::h ? "successive-bound-h" : "successive-bound-iota";
  rep.n = n;
  rep.mode = iso_mode_name(mode);

  if (mode == iso_mode::h) {
    ratio hn = h_n(g, n, opt).value;
    ratio hn1 = h_n(g, n + 1, opt).value;
    ratio rhs = hn1 / (ratio::from_int(static_cast<std::uint64_t>(10 * n)) + hn1);
    rep.lhs = value::exact(hn, "h_n");
    rep.rhs = value::exact(rhs, "h_{n+1}/(10n+h_{n+1})");
    rep.status = (rhs <= hn) ? check_status::pass : check_status::fail;
    if (!rhs.is_zero()) rep.slack = hn.to_double() / rhs.to_double();
  } else {
    ratio in = iota_n(g, n, opt).value;
    ratio in1 = iota_n(g, n + 1, opt).value;
    ratio rhs = (in1 * 2) / (ratio::from_int(static_cast<std::uint64_t>(20 * n)) + in1);
    rep.lhs = value::exact(in, "iota_n");
    rep.rhs = value::exact(rhs, "2 iota_{n+1}/(20n+iota_{n+1})");
    bool main_pass = rhs <= in;
    sub_check cor;
    cor.id = "iota-linear";
    cor.lhs = value::exact(in1, "iota_{n+1}");
    cor.rhs = value::exact(in * static_cast<std::uint64_t>(11 * n + 1), "(11n+1) iota_n");
    cor.pass = in1 <= in * static_cast<std::uint64_t>(11 * n + 1);
    rep.parts.push_back(cor);
    rep.status = (main_pass && cor.pass) ? check_status::pass : check_status::fail;
    if (!rhs.is_zero()) rep.slack = in.to_double() / rhs.to_double();
  }
  return rep;
}

check_report edge_transitive_check(const graph& g, const perm_group& group, int n,
                                   const enum_options& opt) {
  if (!is_connected(g)) throw error(errc::not_connected, "needs a connected graph");
  if (!is_transitive(group)) throw error(errc::not_transitive, "action is not transitive");
  for (const auto& p : group.generators)
    if (!is_automorphism(g, p))
      throw error(errc::not_automorphisms, "generator is not an automorphism");
  auto edges = g.edge_list();
  if (edges.empty()) throw error(errc::not_edge_transitive, "no edges");
  // orbit of the first edge must cover the edge set
  std::set<std::pair<int, int>> orbit_edges;
  for (const auto& p : group.elements) {
    int u = p[edges[0].first], v = p[edges[0].second];
    orbit_edges.emplace(std::min(u, v), std::max(u, v));
  }
  if (orbit_edges.size() != edges.size())
    throw error(errc::not_edge_transitive, "edge orbit does not cover all edges");

  ratio hn = h_n(g, n, opt).value;
  ratio hn1 = h_n(g, n + 1, opt).value;
  ratio rhs = hn * static_cast<std::uint64_t>(10 * n + 1);

  check_report rep;
  rep.check_id = "edge-transitive";
  rep.n = n;
  rep.lhs = value::exact(hn1, "h_{n+1}");
  rep.rhs = value::exact(rhs, "(10n+1) h_n");
  rep.status = (hn1 <= rhs) ? check_status::pass : check_status::fail;
  return rep;
}

}  // namespace mwiso
