#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mwiso/cayley.hpp"
#include "mwiso/corpus.hpp"
#include "mwiso/imprimitivity.hpp"
#include "mwiso/isoperimetry.hpp"
#include "mwiso/phi.hpp"
#include "mwiso/spectral.hpp"
#include "mwiso/suites.hpp"

namespace {

using namespace mwiso;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::io_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw error(errc::io_error, "cannot write " + path);
  out << text;
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& kvs) {
  std::map<std::string, std::string> out;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw error(errc::param_out_of_range, "expected key=value, got '" + kv + "'");
    out[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return out;
}

int require_int(const std::map<std::string, std::string>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end())
    throw error(errc::param_out_of_range, "missing parameter " + key);
  return std::stoi(it->second);
}

int cmd_compute(const std::string& graph_path, int n, const std::string& quantity_name,
                bool with_realizer, bool as_json) {
  graph g = load_graph(graph_path);
  if (quantity_name == "lambda") {
    spectrum spec = eigenvalues(g);
    double lam = lambda_n(spec, n);
    if (as_json) {
      ordered_json j;
      j["quantity"] = "lambda";
      j["n"] = n;
      j["value"] = format_double(lam);
      ordered_json eig = ordered_json::array();
      for (double x : spec.eigenvalues) eig.push_back(format_double(x));
      j["spectrum"] = ordered_json{{"eigenvalues", eig}, {"residual", format_double(spec.residual)}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::printf("%.12f\n", lam);
    }
    return 0;
  }

  iso_result res;
  if (quantity_name == "h")
    res = h_n(g, n);
  else if (quantity_name == "iota")
    res = iota_n(g, n);
  else if (quantity_name == "rho")
    res = rho_n(g, n);
  else if (quantity_name == "iota-tilde")
    res = iota_tilde_n(g, n);
  else
    throw error(errc::param_out_of_range, "unknown quantity '" + quantity_name + "'");

  if (as_json) {
    ordered_json j;
    j["quantity"] = quantity_name;
    j["n"] = n;
    j["num"] = res.value.num();
    j["den"] = res.value.den();
    j["realizer"] = res.assignment;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << res.value.str() << "\n";
    if (with_realizer) {
      std::cout << "part";
      for (int x : res.assignment) std::cout << " " << x;
      std::cout << "\n";
    }
  }
  return 0;
}

cayley_result build_named_group_cayley(const std::map<std::string, std::string>& params) {
  auto git = params.find("group");
  if (git == params.end())
    throw error(errc::param_out_of_range, "cayley family needs group=<kind>:<k>");
  std::string spec = git->second;
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw error(errc::param_out_of_range, "group must look like cyclic:6");
  std::string kind = spec.substr(0, colon);
  int k = std::stoi(spec.substr(colon + 1));
  group_table tbl;
  if (kind == "cyclic")
    tbl = cyclic_group(k);
  else if (kind == "dihedral")
    tbl = dihedral_group(k);
  else if (kind == "sym")
    tbl = symmetric_group_table(k);
  else
    throw error(errc::param_out_of_range, "unknown group kind '" + kind + "'");

  auto sit = params.find("gens");
  if (sit == params.end())
    throw error(errc::param_out_of_range, "cayley family needs gens=<i,j,...>");
  std::vector<int> s;
  std::string cur;
  for (char c : sit->second + ",") {
    if (c == ',') {
      if (!cur.empty()) s.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return cayley_graph(tbl, s);
}

int cmd_family(const std::string& name, const std::vector<std::string>& kvs,
               const std::string& prefix) {
  auto params = parse_params(kvs);
  cayley_result cr;
  ordered_json meta;
  meta["family"] = name;

  if (name == "fattened-cycle") {
    int m = require_int(params, "m"), k = require_int(params, "k");
    cr = family_fattened_cycle(m, k);
    meta["params"] = ordered_json{{"m", m}, {"k", k}};
    meta["note"] = "connection set symmetrized to {+1,-1} x Z/k";
  } else if (name == "k2-product") {
    int n_cap = require_int(params, "N");
    cr = family_k2_product(n_cap);
    meta["params"] = ordered_json{{"N", n_cap}};
  } else if (name == "dihedral-product") {
    int n_cap = require_int(params, "N"), n = require_int(params, "n");
    cr = family_dihedral_product(n_cap, n);
    meta["params"] = ordered_json{{"N", n_cap}, {"n", n}};
  } else if (name == "cycle") {
    int m = require_int(params, "m");
    cr = family_cycle(m);
    meta["params"] = ordered_json{{"m", m}};
  } else if (name == "complete") {
    int n_cap = require_int(params, "N");
    cr = family_complete(n_cap);
    meta["params"] = ordered_json{{"N", n_cap}};
  } else if (name == "cayley") {
    cr = build_named_group_cayley(params);
    ordered_json p = ordered_json::object();
    for (const auto& [k, v] : params) p[k] = v;
    meta["params"] = p;
  } else {
    throw error(errc::unknown_family, "'" + name + "'");
  }

  meta["num_vertices"] = cr.g.num_vertices;
  meta["regular_degree"] =
      cr.g.regular_degree ? ordered_json(*cr.g.regular_degree) : ordered_json(nullptr);
  meta["connected"] = is_connected(cr.g);
  meta["vertex_transitive"] = is_transitive(cr.action);

  write_file(prefix + ".graph", serialize_graph(cr.g));
  write_file(prefix + ".perms", serialize_perms(cr.action.generators));
  write_file(prefix + ".json", meta.dump(2) + "\n");
  std::cout << "wrote " << prefix << ".graph " << prefix << ".perms " << prefix << ".json\n";
  return 0;
}

corpus_instance custom_instance(const std::string& graph_path, const std::string& perms_path) {
  corpus_instance inst;
  inst.name = "custom";
  inst.family = "custom";
  inst.params = {{"graph", graph_path}, {"perms", perms_path}};
  inst.g = load_graph(graph_path);
  auto gens = load_perms(perms_path);
  inst.group = generate_group(gens);
  bool autos = true;
  for (const auto& p : gens)
    if (!is_automorphism(inst.g, p)) autos = false;
  inst.vertex_transitive = autos && is_transitive(inst.group);
  return inst;
}

int cmd_verify(const std::string& suite, const std::string& graph_path,
               const std::string& perms_path, int n_min, int n_max,
               const std::string& json_out) {
  std::vector<corpus_instance> instances;
  if (!graph_path.empty()) {
    if (perms_path.empty())
      throw error(errc::param_out_of_range, "--graph requires --perms");
    instances.push_back(custom_instance(graph_path, perms_path));
  } else {
    instances = builtin_corpus();
  }

  suite_options opt;
  opt.n_min = n_min;
  opt.n_max = n_max;
  auto reports = run_suite(suite, instances, opt);

  ordered_json j = suite_json(suite, reports);
  if (!json_out.empty())
    write_file(json_out, j.dump(2) + "\n");
  else
    std::cout << j.dump(2) << "\n";

  int pass = 0, fail = 0, na = 0, skip = 0;
  for (const auto& r : reports) {
    switch (r.status) {
      case check_status::pass: ++pass; break;
      case check_status::fail: ++fail; break;
      case check_status::not_applicable: ++na; break;
      case check_status::skipped_scale: ++skip; break;
    }
  }
  std::cerr << "suite " << suite << ": " << pass << " pass, " << fail << " fail, " << na
            << " n/a, " << skip << " skipped\n";
  return fail ? 1 : 0;
}

int cmd_phi(const std::string& graph_path, const std::string& perms_path, int n,
            const std::string& mode_name, const std::string& realizer_path) {
  graph g = load_graph(graph_path);
  perm_group group = generate_group(load_perms(perms_path));
  iso_mode mode = mode_name == "iota" ? iso_mode::iota : iso_mode::h;

  gap_outcome out =
      realizer_path.empty()
          ? build_gap_instance(g, group, n, mode)
          : build_gap_instance(g, group, n, mode, parse_partition(read_file(realizer_path)));

  ordered_json j;
  j["n"] = n;
  j["mode"] = iso_mode_name(mode);
  j["low"] = ordered_json{{"num", out.low.num()}, {"den", out.low.den()}};
  j["high"] = ordered_json{{"num", out.high.num()}, {"den", out.high.den()}};
  j["gap"] = out.gap();
  if (out.gap()) {
    phi_result phi = build_phi(*out.instance);
    j["phi"] = phi_json(phi);
    if (phi.l == n) {
      imprimitivity_certificate cert = build_certificate(*out.instance, phi);
      j["certificate"] = certificate_json(cert);
    }
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_blocks(const std::string& perms_path, int n) {
  perm_group group = generate_group(load_perms(perms_path));
  auto systems = block_systems_of_size(group, n);
  ordered_json j;
  j["n"] = n;
  j["domain"] = group.domain;
  j["count"] = systems.size();
  ordered_json arr = ordered_json::array();
  for (const auto& s : systems) arr.push_back(s.blocks.part_of);
  j["systems"] = arr;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_corpus(bool list, const std::string& dump_name, const std::string& prefix) {
  const auto& corpus = builtin_corpus();
  if (list || dump_name.empty()) {
    ordered_json arr = ordered_json::array();
    for (const auto& inst : corpus) {
      ordered_json j;
      j["name"] = inst.name;
      j["family"] = inst.family;
      j["num_vertices"] = inst.g.num_vertices;
      j["group_order"] = inst.group.order();
      j["connected"] = is_connected(inst.g);
      j["vertex_transitive"] = inst.vertex_transitive;
      arr.push_back(j);
    }
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  for (const auto& inst : corpus) {
    if (inst.name != dump_name) continue;
    std::string base = prefix.empty() ? inst.name : prefix;
    write_file(base + ".graph", serialize_graph(inst.g));
    write_file(base + ".perms", serialize_perms(inst.group.generators));
    std::cout << "wrote " << base << ".graph " << base << ".perms\n";
    return 0;
  }
  throw error(errc::param_out_of_range, "no corpus instance named '" + dump_name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multi-way isoperimetry and imprimitivity toolkit"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "exact constants and spectra of a graph file");
  std::string c_graph, c_quantity = "h";
  int c_n = 2;
  bool c_realizer = false, c_json = false;
  compute->add_option("--graph", c_graph, "graph file")->required();
  compute->add_option("--n", c_n, "number of parts / eigenvalue index")->required();
  compute->add_option("--quantity", c_quantity, "h | iota | rho | iota-tilde | lambda");
  compute->add_flag("--realizer", c_realizer, "also print the realizing assignment");
  compute->add_flag("--json", c_json, "JSON output");

  // family
  auto* family = app.add_subcommand("family", "emit a named graph family with its action");
  std::string f_name, f_prefix = "family";
  std::vector<std::string> f_params;
  family->add_option("--name", f_name,
                     "fattened-cycle | k2-product | dihedral-product | cycle | complete | cayley")
      ->required();
  family->add_option("--params", f_params, "key=value parameters")->expected(-1);
  family->add_option("--out", f_prefix, "output path prefix");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string v_suite = "all", v_graph, v_perms, v_json;
  int v_nmin = 2, v_nmax = 0;
  verify->add_option("--suite", v_suite,
                     "basic | cheeger | main | imprimitivity | edge-transitive | "
                     "counterexample | all");
  verify->add_option("--graph", v_graph, "graph file (instead of the builtin corpus)");
  verify->add_option("--perms", v_perms, "acting generators for --graph");
  verify->add_option("--nmin", v_nmin, "smallest n");
  verify->add_option("--nmax", v_nmax, "largest n (0 = |V|-1)");
  verify->add_option("--json", v_json, "write the JSON report here");

  // phi
  auto* phi = app.add_subcommand("phi", "gap test, homomorphism and block certificate");
  std::string p_graph, p_perms, p_mode = "h", p_realizer;
  int p_n = 2;
  phi->add_option("--graph", p_graph, "graph file")->required();
  phi->add_option("--perms", p_perms, "acting generators")->required();
  phi->add_option("--n", p_n, "part count n")->required();
  phi->add_option("--mode", p_mode, "h | iota");
  phi->add_option("--realizer", p_realizer, "partition file achieving the n-way constant");

  // blocks
  auto* blocks = app.add_subcommand("blocks", "systems of imprimitivity of a given size");
  std::string b_perms;
  int b_n = 2;
  blocks->add_option("--perms", b_perms, "generators of the acting group")->required();
  blocks->add_option("--n", b_n, "block count")->required();

  // corpus
  auto* corpus = app.add_subcommand("corpus", "list or export builtin instances");
  bool k_list = false;
  std::string k_dump, k_prefix;
  corpus->add_flag("--list", k_list, "list instances");
  corpus->add_option("--dump", k_dump, "instance name to export");
  corpus->add_option("--out", k_prefix, "output path prefix for --dump");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return cmd_compute(c_graph, c_n, c_quantity, c_realizer, c_json);
    if (family->parsed()) return cmd_family(f_name, f_params, f_prefix);
    if (verify->parsed()) return cmd_verify(v_suite, v_graph, v_perms, v_nmin, v_nmax, v_json);
    if (phi->parsed()) return cmd_phi(p_graph, p_perms, p_n, p_mode, p_realizer);
    if (blocks->parsed()) return cmd_blocks(b_perms, b_n);
    if (corpus->parsed()) return cmd_corpus(k_list, k_dump, k_prefix);
  } catch (const mwiso::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
