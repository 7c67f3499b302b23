#include "mwiso/phi.hpp"

#include <algorithm>
#include <numeric>

namespace mwiso {

const char* iso_mode_name(iso_mode m) { return m == iso_mode::h ? "h" : "iota"; }

namespace {

void require_transitive_automorphisms(const graph& g, const perm_group& group) {
  if (group.domain != g.num_vertices)
    throw error(errc::domain_mismatch, "group domain vs graph");
  if (!is_transitive(group)) throw error(errc::not_transitive, "action is not transitive");
  for (const auto& p : group.generators)
    if (!is_automorphism(g, p))
      throw error(errc::not_automorphisms, "generator is not a graph automorphism");
}

iso_result compute_constant(const graph& g, int n, iso_mode mode, const enum_options& opt) {
  return mode == iso_mode::h ? h_n(g, n, opt) : iota_n(g, n, opt);
}

/// Size ordering of the realizer's parts: largest first, ties by lowest
/// original label; the rest keep their original relative order.
std::vector<int> size_order(const std::vector<vset>& parts) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(parts.size()); ++i)
    if (parts[static_cast<std::size_t>(i)].count() > parts[static_cast<std::size_t>(best)].count())
      best = i;
  std::vector<int> order;
  order.push_back(best);
  for (int i = 0; i < static_cast<int>(parts.size()); ++i)
    if (i != best) order.push_back(i);
  return order;
}

}  // namespace

gap_outcome build_gap_instance(const graph& g, const perm_group& group, int n, iso_mode mode,
                               const partition& realizer, const enum_options& opt) {
  require_transitive_automorphisms(g, group);
  if (n < 2 || n > g.num_vertices - 1)
    throw error(errc::n_out_of_range, "need 2 <= n <= |V|-1");

  iso_result lo = compute_constant(g, n, mode, opt);
  if (!(partition_ratio(g, realizer,
                        mode == iso_mode::h ? quantity::h : quantity::iota) == lo.value))
    throw error(errc::realizer_not_optimal, "partition does not achieve the n-way constant");
  iso_result hi = compute_constant(g, n + 1, mode, opt);

  gap_outcome out;
  out.low = lo.value;
  out.high = hi.value;
  ratio threshold = lo.value * static_cast<std::uint64_t>(2 * (n + 1));
  if (threshold < hi.value) {
    gap_instance inst;
    inst.g = g;
    inst.group = group;
    inst.realizer = realizer;
    inst.n = n;
    inst.mode = mode;
    inst.low = lo.value;
    inst.high = hi.value;
    out.instance = std::move(inst);
  }
  return out;
}

gap_outcome build_gap_instance(const graph& g, const perm_group& group, int n, iso_mode mode,
                               const enum_options& opt) {
  require_transitive_automorphisms(g, group);
  if (n < 2 || n > g.num_vertices - 1)
    throw error(errc::n_out_of_range, "need 2 <= n <= |V|-1");
  iso_result lo = compute_constant(g, n, mode, opt);
  return build_gap_instance(g, group, n, mode, lo.realizer(), opt);
}

overlap classify_overlap(const gap_instance& inst, const perm& g, int j, int k) {
  auto parts0 = inst.realizer.part_sets();
  auto order = size_order(parts0);
  std::vector<vset> parts;
  parts.reserve(parts0.size());
  for (int idx : order) parts.push_back(parts0[static_cast<std::size_t>(idx)]);

  if (j < 0 || k < 0 || j >= inst.n || k >= inst.n)
    throw error(errc::param_out_of_range, "part index");

  std::uint64_t s0 = static_cast<std::uint64_t>(parts[0].count());
  std::uint64_t sj = static_cast<std::uint64_t>(parts[static_cast<std::size_t>(j)].count());
  ratio r = inst.low / inst.high;
  ratio margin = r * (ratio::from_int(s0) + ratio::from_int(sj));

  std::uint64_t cnt = static_cast<std::uint64_t>(
      (apply_set(g, parts[static_cast<std::size_t>(j)]) & parts[static_cast<std::size_t>(k)])
          .count());

  // close: cnt >= |A_j| - margin;  far: cnt <= margin
  bool close = ratio::from_int(cnt) + margin >= ratio::from_int(sj);
  bool far = ratio::from_int(cnt) <= margin;
  if (close && far)
    throw error(errc::dichotomy_violation, "options are not exclusive (gap too small?)");
  if (!close && !far)
    throw error(errc::dichotomy_violation, "overlap falls strictly between the options");
  return close ? overlap::close : overlap::far;
}

namespace {

/// Unique close index for (g, j) over reordered parts; low/high from inst.
int unique_close_index(const std::vector<vset>& parts, const ratio& low, const ratio& high,
                       const perm& g, int j, int n) {
  std::uint64_t s0 = static_cast<std::uint64_t>(parts[0].count());
  std::uint64_t sj = static_cast<std::uint64_t>(parts[static_cast<std::size_t>(j)].count());
  ratio r = low / high;
  ratio margin = r * (ratio::from_int(s0) + ratio::from_int(sj));
  vset image = apply_set(g, parts[static_cast<std::size_t>(j)]);

  int found = -1;
  for (int k = 0; k < n; ++k) {
    std::uint64_t cnt =
        static_cast<std::uint64_t>((image & parts[static_cast<std::size_t>(k)]).count());
    bool close = ratio::from_int(cnt) + margin >= ratio::from_int(sj);
    bool far = ratio::from_int(cnt) <= margin;
    if (close && far)
      throw error(errc::dichotomy_violation, "options are not exclusive");
    if (!close && !far)
      throw error(errc::dichotomy_violation, "overlap falls strictly between the options");
    if (close) {
      if (found >= 0)
        throw error(errc::uniqueness_violation, "two close indices for one translate");
      found = k;
    }
  }
  if (found < 0)
    throw error(errc::uniqueness_violation, "no close index for a translate");
  return found;
}

}  // namespace

phi_result build_phi(const gap_instance& inst) {
  const int n = inst.n;
  auto parts0 = inst.realizer.part_sets();
  auto order1 = size_order(parts0);
  std::vector<vset> parts;
  parts.reserve(parts0.size());
  for (int idx : order1) parts.push_back(parts0[static_cast<std::size_t>(idx)]);

  const auto& elems = inst.group.elements;
  const std::size_t m = elems.size();

  // I_1 over the deterministic element order
  std::vector<int> i1(m);
  for (std::size_t gi = 0; gi < m; ++gi)
    i1[gi] = unique_close_index(parts, inst.low, inst.high, elems[gi], 0, n);

  // relabel so Im(I_1) = [l] in order of first appearance (identity comes
  // first in element order, so label 0 stays put)
  std::vector<int> stage2(static_cast<std::size_t>(n), -1);
  int l = 0;
  for (std::size_t gi = 0; gi < m; ++gi)
    if (stage2[static_cast<std::size_t>(i1[gi])] < 0) stage2[static_cast<std::size_t>(i1[gi])] = l++;
  int next = l;
  for (int k = 0; k < n; ++k)
    if (stage2[static_cast<std::size_t>(k)] < 0) stage2[static_cast<std::size_t>(k)] = next++;

  std::vector<vset> final_parts(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    final_parts[static_cast<std::size_t>(stage2[static_cast<std::size_t>(k)])] =
        parts[static_cast<std::size_t>(k)];

  if (!(final_parts[0] == parts[0]))
    throw error(errc::internal_invariant, "largest part moved during relabeling");

  // (⋄): each part hit by I_1 is nearly as large as the largest
  std::uint64_t s0 = static_cast<std::uint64_t>(final_parts[0].count());
  ratio r = inst.low / inst.high;
  for (int j = 0; j < l; ++j) {
    std::uint64_t sj = static_cast<std::uint64_t>(final_parts[static_cast<std::size_t>(j)].count());
    if (ratio::from_int(sj) + (r * 2 * s0) < ratio::from_int(s0))
      throw error(errc::internal_invariant, "part size bound (diamond) fails");
    if (sj * static_cast<std::uint64_t>(n + 1) < static_cast<std::uint64_t>(n) * s0)
      throw error(errc::internal_invariant, "part size bound n/(n+1) fails");
  }

  // I_j for the remaining labels in [l]
  std::vector<std::vector<int>> table(m, std::vector<int>(static_cast<std::size_t>(l)));
  for (std::size_t gi = 0; gi < m; ++gi)
    table[gi][0] = stage2[static_cast<std::size_t>(i1[gi])];
  for (int j = 1; j < l; ++j) {
    for (std::size_t gi = 0; gi < m; ++gi) {
      int k = unique_close_index(final_parts, inst.low, inst.high, elems[gi], j, n);
      if (k >= l)
        throw error(errc::internal_invariant, "image of I_j escapes [l]");
      table[gi][static_cast<std::size_t>(j)] = k;
    }
  }

  phi_result out;
  out.l = l;
  {
    std::vector<int> reidx(static_cast<std::size_t>(n));
    for (int orig = 0; orig < n; ++orig) {
      // original -> size order -> final
      int pos1 = static_cast<int>(
          std::find(order1.begin(), order1.end(), orig) - order1.begin());
      reidx[static_cast<std::size_t>(orig)] = stage2[static_cast<std::size_t>(pos1)];
    }
    out.reindex = perm(std::move(reidx));
  }

  out.sigma.reserve(m);
  for (std::size_t gi = 0; gi < m; ++gi) {
    try {
      out.sigma.emplace_back(std::vector<int>(table[gi]));
    } catch (const error&) {
      throw error(errc::internal_invariant, "sigma_g is not a bijection of [l]");
    }
  }

  int id_idx = inst.group.element_index(perm::identity(inst.group.domain));
  if (id_idx < 0 || !out.sigma[static_cast<std::size_t>(id_idx)].is_identity())
    throw error(errc::internal_invariant, "sigma at the identity is not the identity");

  // homomorphism law, exhaustive at desk scale
  const std::size_t pair_cap = 1'000'000;
  std::size_t step = (m * m > pair_cap) ? (m * m / pair_cap + 1) : 1;
  std::size_t checked = 0;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = (a * 7919) % step; b < m; b += step) {
      int ab = inst.group.element_index(elems[a].compose(elems[b]));
      if (ab < 0) throw error(errc::internal_invariant, "element list not closed");
      if (!(out.sigma[a].compose(out.sigma[b]) == out.sigma[static_cast<std::size_t>(ab)]))
        throw error(errc::internal_invariant, "homomorphism law fails");
      ++checked;
    }
  }
  (void)checked;

  // closeness certificates
  out.closeness_bound = (r * 4) * s0;
  out.closeness.assign(m, std::vector<int>(static_cast<std::size_t>(l), 0));
  for (std::size_t gi = 0; gi < m; ++gi) {
    for (int j = 0; j < l; ++j) {
      int target = out.sigma[gi][j];
      vset image = apply_set(elems[gi], final_parts[static_cast<std::size_t>(j)]);
      int diff = (image ^ final_parts[static_cast<std::size_t>(target)]).count();
      out.closeness[gi][static_cast<std::size_t>(j)] = diff;
      if (out.closeness_bound < ratio::from_int(static_cast<std::uint64_t>(diff)))
        throw error(errc::internal_invariant, "closeness certificate exceeds the bound");
    }
  }

  // transitivity of the induced action on [l]
  vset orb = vset::single(0);
  for (;;) {
    vset next = orb;
    for (const auto& s : out.sigma) {
      orb.for_each([&](int x) { next.set(s[x]); });
    }
    if (next == orb) break;
    orb = next;
  }
  out.induced_transitive = (orb.count() == l);

  out.parts = std::move(final_parts);
  return out;
}

ordered_json phi_json(const phi_result& phi) {
  ordered_json j;
  j["l"] = phi.l;
  j["reindex"] = phi.reindex.img;
  ordered_json sig = ordered_json::array();
  for (std::size_t gi = 0; gi < phi.sigma.size(); ++gi) {
    ordered_json e;
    e["element_index"] = gi;
    e["images"] = phi.sigma[gi].img;
    sig.push_back(e);
  }
  j["sigma"] = sig;
  int worst = 0;
  for (const auto& row : phi.closeness)
    for (int x : row) worst = std::max(worst, x);
  j["closeness_max"] = ordered_json{{"num", worst}, {"den", 1}};
  j["induced_action_transitive"] = phi.induced_transitive;
  return j;
}

check_report almost_invariance_check(const perm_group& group, const vset& c, std::optional<ratio> eps) {
  if (!is_transitive(group)) throw error(errc::not_transitive, "action is not transitive");
  if (c.empty()) throw error(errc::empty_set, "C must be non-empty");
  vset w = vset::full(group.domain);
  if (!w.contains(c)) throw error(errc::vertex_out_of_range, "C exceeds the domain");

  std::uint64_t csize = static_cast<std::uint64_t>(c.count());
  ratio eps_star;
  for (const auto& h : group.elements) {
    std::uint64_t diff = static_cast<std::uint64_t>((c ^ apply_set(h, c)).count());
    ratio cand(diff, csize);
    if (eps_star < cand) eps_star = cand;
  }

  std::uint64_t complement = static_cast<std::uint64_t>(group.domain) - csize;
  ratio rhs = (eps_star / 2) * static_cast<std::uint64_t>(group.domain);

  check_report rep;
  rep.check_id = "almost-invariance";
  rep.lhs = value::exact(ratio::from_int(complement), "|W \\ C|");
  rep.rhs = value::exact(rhs, "(eps*/2)|W|");
  rep.status = (ratio::from_int(complement) <= rhs) ? check_status::pass : check_status::fail;
  rep.note = "eps* = " + eps_star.str();
  if (eps) {
    sub_check s;
    s.id = "given-eps-covers-eps*";
    s.lhs = value::exact(eps_star, "eps*");
    s.rhs = value::exact(*eps, "eps");
    s.pass = eps_star <= *eps;
    rep.parts.push_back(s);
  }
  return rep;
}

check_report assert_l_equals_n(const phi_result& phi, const gap_instance& inst) {
  check_report rep;
  rep.check_id = "l-equals-n";
  rep.n = inst.n;
  rep.mode = iso_mode_name(inst.mode);
  rep.lhs = value::integer(phi.l, "l");
  rep.rhs = value::integer(inst.n, "n");
  if (phi.l == inst.n) {
    rep.status = check_status::pass;
  } else {
    rep.status = check_status::fail;
    repro_bundle b;
    b.graph_text = serialize_graph(inst.g);
    b.perms_text = serialize_perms(inst.group.generators);
    b.params = "n=" + std::to_string(inst.n) + " mode=" + iso_mode_name(inst.mode) +
               " realizer=" + serialize_partition(inst.realizer);
    rep.repro = b;
  }
  return rep;
}

check_report weak_imprimitivity_bound(const graph& g, const perm_group& group, int n,
                                      const enum_options& opt) {
  require_transitive_automorphisms(g, group);
  if (n < 2 || n > g.num_vertices - 1)
    throw error(errc::n_out_of_range, "need 2 <= n <= |V|-1");

  check_report rep;
  rep.check_id = "weak-imprimitivity";
  rep.n = n;

  if (has_subgroup_of_index(group, n)) {
    rep.status = check_status::not_applicable;
    rep.note = "group has a subgroup of index " + std::to_string(n);
    return rep;
  }

  ratio hn = h_n(g, n, opt).value;
  ratio hn1 = h_n(g, n + 1, opt).value;
  ratio in = iota_n(g, n, opt).value;
  ratio in1 = iota_n(g, n + 1, opt).value;
  std::uint64_t factor = static_cast<std::uint64_t>(2 * (n + 1));

  sub_check sh;
  sh.id = "h";
  sh.lhs = value::exact(hn1, "h_{n+1}");
  sh.rhs = value::exact(hn * factor, "2(n+1) h_n");
  sh.pass = hn1 <= hn * factor;
  sub_check si;
  si.id = "iota";
  si.lhs = value::exact(in1, "iota_{n+1}");
  si.rhs = value::exact(in * factor, "2(n+1) iota_n");
  si.pass = in1 <= in * factor;
  rep.parts = {sh, si};
  rep.lhs = sh.lhs;
  rep.rhs = sh.rhs;
  rep.status = (sh.pass && si.pass) ? check_status::pass : check_status::fail;
  return rep;
}

}  // namespace mwiso
