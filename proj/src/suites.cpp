#include "mwiso/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <thread>

#include "mwiso/imprimitivity.hpp"
#include "mwiso/isoperimetry.hpp"
#include "mwiso/phi.hpp"
#include "mwiso/spectral.hpp"

namespace mwiso {

const std::vector<std::string> suite_names = {"basic",           "cheeger",
                                              "main",            "imprimitivity",
                                              "edge-transitive", "counterexample"};

namespace {

constexpr double kFloatSlack = 1e-7;

/// Per-instance computation cache; a miss that blew the enumeration budget is
/// remembered as absent.
struct iso_cache {
  const corpus_instance& inst;
  enum_options eopt;
  struct slot {
    bool ok = false;
    iso_result res;
  };
  std::map<std::pair<int, int>, slot> values;  // (quantity, n)

  const slot& get(quantity q, int n) {
    auto key = std::make_pair(static_cast<int>(q), n);
    auto it = values.find(key);
    if (it != values.end()) return it->second;
    slot s;
    try {
      switch (q) {
        case quantity::h: s.res = h_n(inst.g, n, eopt); break;
        case quantity::iota: s.res = iota_n(inst.g, n, eopt); break;
        case quantity::rho: s.res = rho_n(inst.g, n, eopt); break;
        case quantity::iota_tilde: s.res = iota_tilde_n(inst.g, n, eopt); break;
      }
      s.ok = true;
    } catch (const error& e) {
      if (e.code() != errc::enumeration_too_large) throw;
    }
    return values.emplace(key, std::move(s)).first->second;
  }
};

check_report base_report(const corpus_instance& inst, std::string id, int n = -1) {
  check_report r;
  r.check_id = std::move(id);
  r.instance = inst.desc();
  r.n = n;
  return r;
}

check_report skipped(const corpus_instance& inst, std::string id, int n, std::string why) {
  check_report r = base_report(inst, std::move(id), n);
  r.status = check_status::skipped_scale;
  r.note = std::move(why);
  return r;
}

repro_bundle make_repro(const corpus_instance& inst, const std::string& params) {
  repro_bundle b;
  b.graph_text = serialize_graph(inst.g);
  b.perms_text = serialize_perms(inst.group.generators);
  b.params = params;
  return b;
}

check_report exact_le(const corpus_instance& inst, std::string id, int n, ratio lhs,
                      std::string lexpr, ratio rhs, std::string rexpr) {
  check_report r = base_report(inst, std::move(id), n);
  r.lhs = value::exact(lhs, std::move(lexpr));
  r.rhs = value::exact(rhs, std::move(rexpr));
  r.status = lhs <= rhs ? check_status::pass : check_status::fail;
  if (r.status == check_status::fail) r.repro = make_repro(inst, "n=" + std::to_string(n));
  return r;
}

check_report float_le(const corpus_instance& inst, std::string id, int n, double lhs,
                      std::string lexpr, double rhs, std::string rexpr) {
  check_report r = base_report(inst, std::move(id), n);
  r.lhs = value::real(lhs, std::move(lexpr));
  r.rhs = value::real(rhs, std::move(rexpr));
  r.slack = rhs - lhs;
  r.status = lhs <= rhs + kFloatSlack ? check_status::pass : check_status::fail;
  if (r.status == check_status::fail) r.repro = make_repro(inst, "n=" + std::to_string(n));
  return r;
}

int top_n(const corpus_instance& inst, const suite_options& opt) {
  int hi = inst.g.num_vertices - 1;
  if (opt.n_max > 0) hi = std::min(hi, opt.n_max);
  return hi;
}

// ---------------------------------------------------------------- basic

void basic_suite(const corpus_instance& inst, const suite_options& opt, iso_cache& cache,
                 std::vector<check_report>& out) {
  const graph& g = inst.g;
  spectrum spec = eigenvalues(g);

  for (int n = opt.n_min; n <= top_n(inst, opt); ++n) {
    const auto& hn = cache.get(quantity::h, n);
    const auto& hn1 = cache.get(quantity::h, n + 1);
    if (hn.ok && hn1.ok)
      out.push_back(exact_le(inst, "basic.h-monotone", n, hn.res.value, "h_n", hn1.res.value,
                             "h_{n+1}"));
    else
      out.push_back(skipped(inst, "basic.h-monotone", n, "enumeration over budget"));

    const auto& in = cache.get(quantity::iota, n);
    const auto& in1 = cache.get(quantity::iota, n + 1);
    if (in.ok && in1.ok)
      out.push_back(exact_le(inst, "basic.iota-monotone", n, in.res.value, "iota_n",
                             in1.res.value, "iota_{n+1}"));
    else
      out.push_back(skipped(inst, "basic.iota-monotone", n, "enumeration over budget"));

    {
      check_report r = base_report(inst, "basic.lambda-monotone", n);
      double ln = lambda_n(spec, n), ln1 = lambda_n(spec, n + 1);
      r.lhs = value::real(ln, "lambda_n");
      r.rhs = value::real(ln1, "lambda_{n+1}");
      r.status = ln <= ln1 + kFloatSlack ? check_status::pass : check_status::fail;
      out.push_back(std::move(r));
    }

    if (g.regular_degree && hn.ok && in.ok) {
      std::uint64_t d = static_cast<std::uint64_t>(*g.regular_degree);
      out.push_back(exact_le(inst, "basic.sandwich-lower", n, (hn.res.value * 2) / d, "2h_n/d",
                             in.res.value, "iota_n"));
      out.push_back(exact_le(inst, "basic.sandwich-upper", n, in.res.value, "iota_n",
                             hn.res.value * 2, "2h_n"));
    }

    if (g.regular_degree) {
      const auto& rn = cache.get(quantity::rho, n);
      if (rn.ok && hn.ok) {
        ratio hprime = hn.res.value / static_cast<std::uint64_t>(*g.regular_degree);
        out.push_back(
            exact_le(inst, "basic.rho-lower", n, rn.res.value, "rho_n", hprime, "h'_n"));
        out.push_back(exact_le(inst, "basic.rho-upper", n, hprime, "h'_n",
                               rn.res.value * static_cast<std::uint64_t>(n), "n rho_n"));
      } else {
        out.push_back(skipped(inst, "basic.rho-sandwich", n, "enumeration over budget"));
      }
    }

    const auto& itn = cache.get(quantity::iota_tilde, n);
    if (itn.ok && in.ok) {
      out.push_back(exact_le(inst, "basic.iota-tilde-lower", n, itn.res.value, "iota~_n",
                             in.res.value, "iota_n"));
      out.push_back(exact_le(inst, "basic.iota-tilde-upper", n, in.res.value, "iota_n",
                             itn.res.value * static_cast<std::uint64_t>(n), "n iota~_n"));
    } else {
      out.push_back(skipped(inst, "basic.iota-tilde-sandwich", n, "enumeration over budget"));
    }
  }
}

// ---------------------------------------------------------------- cheeger

void cheeger_suite(const corpus_instance& inst, const suite_options& opt, iso_cache& cache,
                   std::vector<check_report>& out) {
  const graph& g = inst.g;
  spectrum spec = eigenvalues(g);

  {
    check_report r = base_report(inst, "cheeger.spectrum-sanity");
    double sum = 0;
    for (double l : spec.eigenvalues) sum += l;
    double degsum = 0;
    for (int d : g.degree_sequence) degsum += d;
    double trace_diff = std::abs(sum - degsum);
    int maxdeg = *std::max_element(g.degree_sequence.begin(), g.degree_sequence.end());
    bool ok = spec.residual < 1e-8 && trace_diff < 1e-6 &&
              std::abs(spec.eigenvalues.front()) < 1e-8 &&
              spec.eigenvalues.back() <= 2.0 * maxdeg + 1e-8;
    r.lhs = value::real(spec.residual, "residual");
    r.rhs = value::real(1e-8, "tolerance");
    r.note = "trace diff " + format_double(trace_diff);
    r.status = ok ? check_status::pass : check_status::fail;
    out.push_back(std::move(r));
  }

  bool connected = is_connected(g);
  double l2 = lambda_n(spec, 2);

  const auto& h2 = cache.get(quantity::h, 2);
  const auto& i2 = cache.get(quantity::iota, 2);

  if (connected && g.regular_degree && h2.ok) {
    double d = static_cast<double>(*g.regular_degree);
    out.push_back(float_le(inst, "cheeger.alon-milman-lower", 2, l2 / 2.0, "lambda_2/2",
                           h2.res.value.to_double(), "h_2"));
    out.push_back(float_le(inst, "cheeger.alon-milman-upper", 2, h2.res.value.to_double(), "h_2",
                           std::sqrt(2.0 * d) * std::sqrt(l2), "sqrt(2d) sqrt(lambda_2)"));
  }

  if (i2.ok) {
    double root = std::sqrt(i2.res.value.to_double() + 1.0) - 1.0;
    out.push_back(float_le(inst, "cheeger.bht", 2, root * root / 4.0, "(sqrt(iota_2+1)-1)^2/4",
                           l2, "lambda_2"));
  }

  if (g.regular_degree) {
    double d = static_cast<double>(*g.regular_degree);
    for (int n = opt.n_min; n <= top_n(inst, opt); ++n) {
      const auto& rn = cache.get(quantity::rho, n);
      if (!rn.ok) {
        out.push_back(skipped(inst, "cheeger.lgt-lower", n, "enumeration over budget"));
        continue;
      }
      double lam_prime = lambda_n(spec, n) / d;
      out.push_back(float_le(inst, "cheeger.lgt-lower", n, lam_prime / 2.0, "lambda'_n/2",
                             rn.res.value.to_double(), "rho_n"));
    }
    for (int n = opt.n_min; n <= top_n(inst, opt); ++n) {
      const auto& hn = cache.get(quantity::h, n);
      if (!hn.ok) {
        out.push_back(skipped(inst, "cheeger.lambda-h-lower", n, "enumeration over budget"));
        continue;
      }
      out.push_back(float_le(inst, "cheeger.lambda-h-lower", n, lambda_n(spec, n) / 2.0,
                             "lambda_n/2", hn.res.value.to_double(), "h_n"));
    }
  }

  {
    // threshold sweeps on a few deterministic functions
    check_report r = base_report(inst, "cheeger.bht-sweep");
    double worst = 0;
    bool ok = true;
    std::vector<vertex_function> fs;
    vertex_function ind;
    ind.values.assign(static_cast<std::size_t>(g.num_vertices), 0.0);
    ind.values[0] = 1.0;
    fs.push_back(ind);
    vertex_function half = ind;
    for (int v = 0; v < g.num_vertices / 2; ++v) half.values[static_cast<std::size_t>(v)] = 1.0;
    fs.push_back(half);
    vertex_function ramp;
    for (int v = 0; v < g.num_vertices; ++v)
      ramp.values.push_back(1.0 + static_cast<double>(v % 5));
    fs.push_back(ramp);
    for (const auto& f : fs) {
      sweep_result s = bht_sweep(g, f);
      worst = std::min(worst, s.slack);
      if (s.slack < -1e-9) ok = false;
    }
    r.slack = worst;
    r.status = ok ? check_status::pass : check_status::fail;
    out.push_back(std::move(r));
  }
}

// ---------------------------------------------------------------- main

void main_suite(const corpus_instance& inst, const suite_options& opt, iso_cache& cache,
                std::vector<check_report>& out) {
  if (!inst.vertex_transitive || !is_connected(inst.g)) return;
  for (int n = opt.n_min; n <= top_n(inst, opt); ++n) {
    for (iso_mode mode : {iso_mode::h, iso_mode::iota}) {
      quantity q = mode == iso_mode::h ? quantity::h : quantity::iota;
      const auto& lo = cache.get(q, n);
      const auto& hi = cache.get(q, n + 1);
      std::string id = mode == iso_mode::h ? "main.bound-h" : "main.bound-iota";
      if (!lo.ok || !hi.ok) {
        out.push_back(skipped(inst, id, n, "enumeration over budget"));
        continue;
      }
      check_report r = successive_bound_check(inst.g, inst.group, n, mode, cache.eopt);
      r.check_id = id;
      r.instance = inst.desc();
      if (r.status == check_status::fail) r.repro = make_repro(inst, "n=" + std::to_string(n));
      out.push_back(std::move(r));
    }
  }
}

// ---------------------------------------------------------------- imprimitivity

void imprimitivity_suite(const corpus_instance& inst, const suite_options& opt, iso_cache& cache,
                         std::vector<check_report>& out) {
  if (!inst.vertex_transitive) return;
  const graph& g = inst.g;
  bool connected = is_connected(g);

  for (int n = opt.n_min; n <= top_n(inst, opt); ++n) {
    for (iso_mode mode : {iso_mode::h, iso_mode::iota}) {
      quantity q = mode == iso_mode::h ? quantity::h : quantity::iota;
      std::string suffix = std::string(".") + iso_mode_name(mode);
      const auto& lo = cache.get(q, n);
      const auto& hi = cache.get(q, n + 1);
      if (!lo.ok || !hi.ok) {
        out.push_back(skipped(inst, "imprimitivity.gap" + suffix, n, "enumeration over budget"));
        continue;
      }
      if (!(lo.res.value * static_cast<std::uint64_t>(2 * (n + 1)) < hi.res.value)) continue;

      gap_instance gi;
      gi.g = g;
      gi.group = inst.group;
      gi.realizer = lo.res.realizer();
      gi.n = n;
      gi.mode = mode;
      gi.low = lo.res.value;
      gi.high = hi.res.value;
      try {
        phi_result phi = build_phi(gi);
        {
          check_report r = base_report(inst, "imprimitivity.phi" + suffix, n);
          r.mode = iso_mode_name(mode);
          r.lhs = value::integer(phi.l, "l");
          r.rhs = value::integer(n, "n");
          r.note = std::string("induced action transitive: ") +
                   (phi.induced_transitive ? "yes" : "no");
          r.status = check_status::pass;
          out.push_back(std::move(r));
        }
        {
          check_report r = assert_l_equals_n(phi, gi);
          r.check_id = "imprimitivity.l-equals-n" + suffix;
          r.instance = inst.desc();
          out.push_back(std::move(r));
        }
        imprimitivity_certificate cert = build_certificate(gi, phi);
        {
          check_report r = base_report(inst, "imprimitivity.certificate" + suffix, n);
          r.mode = iso_mode_name(mode);
          int worst = *std::max_element(cert.sym_diffs.begin(), cert.sym_diffs.end());
          r.lhs = value::integer(worst, "max |V_i sym A_i|");
          r.rhs = value::exact(cert.bound, "4 low/high |V|");
          r.status = (cert.check_a && cert.check_b && cert.check_c) ? check_status::pass
                                                                    : check_status::fail;
          if (gi.low.is_zero()) {
            // baby case: blocks must be exactly the connected components
            auto comps = components(g);
            std::vector<int> labels(static_cast<std::size_t>(g.num_vertices), -1);
            for (std::size_t ci = 0; ci < comps.size(); ++ci)
              comps[ci].for_each([&](int v) {
                labels[static_cast<std::size_t>(v)] = static_cast<int>(ci);
              });
            partition comp_part(std::move(labels), static_cast<int>(comps.size()));
            sub_check s;
            s.id = "baby-blocks-equal-components";
            s.pass = comp_part.canonical() == cert.blocks.blocks.canonical();
            s.lhs = value::integer(static_cast<long long>(comps.size()), "components");
            s.rhs = value::integer(cert.blocks.block_count(), "blocks");
            if (!s.pass) r.status = check_status::fail;
            r.parts.push_back(std::move(s));
          }
          if (r.status == check_status::fail)
            r.repro =
                make_repro(inst, "n=" + std::to_string(n) + " mode=" + iso_mode_name(mode));
          out.push_back(std::move(r));
        }
        if (connected) {
          for (int b = 0; b < cert.blocks.block_count(); ++b) {
            check_report r = base_report(inst, "imprimitivity.hall-matching" + suffix, n);
            auto matching = hall_matching(g, cert.blocks, b);
            r.lhs = value::integer(static_cast<long long>(matching.size()), "matched");
            r.rhs = value::integer(
                cert.blocks.blocks.part_sets()[static_cast<std::size_t>(b)].count(), "|V_i|");
            r.status = r.lhs.i == r.rhs.i ? check_status::pass : check_status::fail;
            out.push_back(std::move(r));
          }
        }
      } catch (const error& e) {
        check_report r = base_report(inst, "imprimitivity.pipeline" + suffix, n);
        r.status = check_status::fail;
        r.note = e.what();
        r.repro = make_repro(inst, "n=" + std::to_string(n) + " mode=" + iso_mode_name(mode));
        out.push_back(std::move(r));
      }
    }
  }

  // no transitive action on n points forces the linear bound (both modes)
  for (int n = opt.n_min; n <= top_n(inst, opt); ++n) {
    try {
      check_report r = weak_imprimitivity_bound(g, inst.group, n, cache.eopt);
      r.check_id = "imprimitivity.weak-bound";
      r.instance = inst.desc();
      if (r.status == check_status::fail) r.repro = make_repro(inst, "n=" + std::to_string(n));
      out.push_back(std::move(r));
    } catch (const error& e) {
      if (e.code() == errc::enumeration_too_large || e.code() == errc::group_too_large)
        out.push_back(skipped(inst, "imprimitivity.weak-bound", n, e.what()));
      else
        throw;
    }
  }

  // Hall matchings across every block system of the action (connected only)
  if (connected) {
    for (int n = 2; n < g.num_vertices; ++n) {
      if (g.num_vertices % n != 0) continue;
      auto systems = block_systems_of_size(inst.group, n);
      for (std::size_t si = 0; si < systems.size(); ++si) {
        for (int b = 0; b < systems[si].block_count(); ++b) {
          check_report r = base_report(inst, "imprimitivity.hall-blocks", n);
          r.note = "system " + std::to_string(si) + " block " + std::to_string(b);
          auto matching = hall_matching(g, systems[si], b);
          vset block = systems[si].blocks.part_sets()[static_cast<std::size_t>(b)];
          bool ok = static_cast<int>(matching.size()) == block.count();
          // Hall condition, exhaustively for small blocks
          if (block.count() <= 12) {
            auto verts = block.to_vector();
            for (std::uint32_t mask = 1; mask < (1u << verts.size()) && ok; ++mask) {
              vset k;
              for (std::size_t t = 0; t < verts.size(); ++t)
                if (mask & (1u << t)) k.set(verts[t]);
              vset nbrs;
              k.for_each([&](int v) {
                nbrs = nbrs | (g.adj_bits[static_cast<std::size_t>(v)] - block);
              });
              if (nbrs.count() < k.count()) ok = false;
            }
          }
          r.lhs = value::integer(static_cast<long long>(matching.size()), "matched");
          r.rhs = value::integer(block.count(), "|V_i|");
          r.status = ok ? check_status::pass : check_status::fail;
          if (!ok) r.repro = make_repro(inst, "n=" + std::to_string(n));
          out.push_back(std::move(r));
        }
      }
    }
  }
}

// ---------------------------------------------------------------- edge-transitive

void edge_transitive_suite(const corpus_instance& inst, const suite_options& opt,
                           iso_cache& cache, std::vector<check_report>& out) {
  if (!inst.edge_transitive_suite) return;
  perm_group aut = automorphism_group(inst.g);
  for (int n = opt.n_min; n <= top_n(inst, opt); ++n) {
    const auto& lo = cache.get(quantity::h, n);
    const auto& hi = cache.get(quantity::h, n + 1);
    if (!lo.ok || !hi.ok) {
      out.push_back(skipped(inst, "edge-transitive.bound", n, "enumeration over budget"));
      continue;
    }
    check_report r = edge_transitive_check(inst.g, aut, n, cache.eopt);
    r.check_id = "edge-transitive.bound";
    r.instance = inst.desc();
    r.note = "acting group: Aut, order " + std::to_string(aut.order());
    if (r.status == check_status::fail) r.repro = make_repro(inst, "n=" + std::to_string(n));
    out.push_back(std::move(r));
  }
}

// ---------------------------------------------------------------- counterexample

void counterexample_suite(const corpus_instance& inst, const suite_options& opt,
                          iso_cache& cache, std::vector<check_report>& out) {
  (void)opt;
  if (inst.family == "k2-product") {
    int cap = std::stoi(inst.params[0].second);
    const auto& h2 = cache.get(quantity::h, 2);
    const auto& h3 = cache.get(quantity::h, 3);
    if (!h2.ok || !h3.ok) {
      out.push_back(skipped(inst, "counterexample.k2-product", 2, "enumeration over budget"));
      return;
    }
    out.push_back(exact_le(inst, "counterexample.h2-at-most-one", 2, h2.res.value, "h_2",
                           ratio(1, 1), "1"));
    // h_2 of the complete factor, computed exactly on K_N itself
    ratio hk = h_n(family_complete(cap).g, 2, cache.eopt).value;
    out.push_back(exact_le(inst, "counterexample.h3-at-least-clique", 3, hk, "h_2(K_N)",
                           h3.res.value, "h_3"));
    {
      check_report r = base_report(inst, "counterexample.split-ratio", 2);
      ratio split = partition_ratio(inst.g, k2_product_designated_partition(cap), quantity::h);
      r.lhs = value::exact(split, "designated split ratio");
      r.rhs = value::exact(ratio(1, 1), "1");
      r.status = split == ratio(1, 1) ? check_status::pass : check_status::fail;
      out.push_back(std::move(r));
    }
    if (!h2.res.value.is_zero()) {
      check_report r = base_report(inst, "counterexample.gap-ratio", 3);
      ratio q = h3.res.value / h2.res.value;
      r.lhs = value::exact(hk, "h_2(K_N)");
      r.rhs = value::exact(q, "h_3/h_2");
      r.status = hk <= q ? check_status::pass : check_status::fail;
      out.push_back(std::move(r));
    }
  } else if (inst.family == "dihedral-product") {
    int cap = std::stoi(inst.params[0].second);
    int n = std::stoi(inst.params[1].second);
    ratio split =
        partition_ratio(inst.g, dihedral_product_designated_partition(cap, n), quantity::h);
    out.push_back(exact_le(inst, "counterexample.designated-partition", n, split,
                           "designated n-partition ratio", ratio(1, 1), "1"));
    const auto& hn = cache.get(quantity::h, n);
    if (hn.ok)
      out.push_back(exact_le(inst, "counterexample.hn-at-most-one", n, hn.res.value, "h_n",
                             ratio(1, 1), "1"));
    else
      out.push_back(skipped(inst, "counterexample.hn-at-most-one", n, "enumeration over budget"));
  } else if (inst.family == "fattened-cycle" || inst.family == "cayley") {
    check_report r = base_report(inst, "counterexample.family-valid");
    bool ok = inst.g.regular_degree.has_value() && is_transitive(inst.group);
    for (const auto& p : inst.group.generators)
      if (!is_automorphism(inst.g, p)) ok = false;
    r.status = ok ? check_status::pass : check_status::fail;
    out.push_back(std::move(r));
  }
}

using suite_fn = void (*)(const corpus_instance&, const suite_options&, iso_cache&,
                          std::vector<check_report>&);

suite_fn suite_function(const std::string& name) {
  if (name == "basic") return basic_suite;
  if (name == "cheeger") return cheeger_suite;
  if (name == "main") return main_suite;
  if (name == "imprimitivity") return imprimitivity_suite;
  if (name == "edge-transitive") return edge_transitive_suite;
  if (name == "counterexample") return counterexample_suite;
  return nullptr;
}

}  // namespace

std::vector<check_report> run_suite(const std::string& suite,
                                    const std::vector<corpus_instance>& instances,
                                    const suite_options& opt) {
  std::vector<std::string> suites;
  if (suite == "all")
    suites = suite_names;
  else if (suite_function(suite))
    suites = {suite};
  else
    throw error(errc::param_out_of_range, "unknown suite '" + suite + "'");

  // one job per instance so the enumeration cache is shared across suites;
  // per-suite report blocks are reassembled in (suite, instance) order after
  unsigned outer = worker_count(opt.threads);
  enum_options eopt;
  eopt.budget = opt.budget;
  eopt.threads = (instances.size() > 1) ? 1 : 0;  // avoid oversubscription

  std::vector<std::vector<std::vector<check_report>>> results(
      instances.size(), std::vector<std::vector<check_report>>(suites.size()));
  auto run_job = [&](std::size_t i) {
    iso_cache cache{instances[i], eopt, {}};
    for (std::size_t s = 0; s < suites.size(); ++s) {
      try {
        suite_function(suites[s])(instances[i], opt, cache, results[i][s]);
      } catch (const std::exception& e) {
        check_report r = base_report(instances[i], suites[s] + ".error");
        r.status = check_status::fail;
        r.note = e.what();
        r.repro = make_repro(instances[i], "suite=" + suites[s]);
        results[i][s].push_back(std::move(r));
      }
    }
  };

  if (outer <= 1 || instances.size() <= 1) {
    for (std::size_t i = 0; i < instances.size(); ++i) run_job(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < outer; ++t)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= instances.size()) return;
          run_job(i);
        }
      });
    for (auto& th : pool) th.join();
  }

  std::vector<check_report> out;
  for (std::size_t s = 0; s < suites.size(); ++s)
    for (std::size_t i = 0; i < instances.size(); ++i)
      for (auto& rep : results[i][s]) out.push_back(std::move(rep));
  return out;
}

ordered_json suite_json(const std::string& suite, const std::vector<check_report>& reports) {
  ordered_json j;
  j["schema"] = 1;
  j["suite"] = suite;
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  j["reports"] = arr;
  return j;
}

bool any_fail(const std::vector<check_report>& reports) {
  for (const auto& r : reports)
    if (r.status == check_status::fail) return true;
  return false;
}

}  // namespace mwiso
