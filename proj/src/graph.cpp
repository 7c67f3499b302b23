#include "mwiso/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace mwiso {

std::size_t graph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& nb : adjacency) twice += nb.size();
  return twice / 2;
}

std::vector<std::pair<int, int>> graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < num_vertices; ++u)
    for (int v : adjacency[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

graph new_graph(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
  if (num_vertices < 1)
    throw error(errc::param_out_of_range, "graph needs at least one vertex");
  if (num_vertices > vset::max_bits)
    throw error(errc::graph_too_large,
                "at most " + std::to_string(vset::max_bits) + " vertices supported");

  std::set<std::pair<int, int>> uniq;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices)
      throw error(errc::vertex_out_of_range,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
      throw error(errc::self_loop, "vertex " + std::to_string(u));
    uniq.emplace(std::min(u, v), std::max(u, v));
  }

  graph g;
  g.num_vertices = num_vertices;
  g.adjacency.resize(static_cast<std::size_t>(num_vertices));
  g.adj_bits.assign(static_cast<std::size_t>(num_vertices), vset{});
  for (auto [u, v] : uniq) {
    g.adjacency[static_cast<std::size_t>(u)].push_back(v);
    g.adjacency[static_cast<std::size_t>(v)].push_back(u);
    g.adj_bits[static_cast<std::size_t>(u)].set(v);
    g.adj_bits[static_cast<std::size_t>(v)].set(u);
  }
  for (auto& nb : g.adjacency) std::sort(nb.begin(), nb.end());

  g.degree_sequence.resize(static_cast<std::size_t>(num_vertices));
  bool regular = true;
  for (int v = 0; v < num_vertices; ++v) {
    g.degree_sequence[static_cast<std::size_t>(v)] =
        static_cast<int>(g.adjacency[static_cast<std::size_t>(v)].size());
    if (g.degree_sequence[static_cast<std::size_t>(v)] != g.degree_sequence[0]) regular = false;
  }
  if (regular) g.regular_degree = g.degree_sequence[0];
  return g;
}

static void require_disjoint(const vset& a, const vset& b) {
  if (a.intersects(b)) throw error(errc::not_disjoint, "sets intersect");
}

int edge_boundary(const graph& g, const vset& a, const vset& b) {
  require_disjoint(a, b);
  int count = 0;
  a.for_each([&](int u) { count += (g.adj_bits[static_cast<std::size_t>(u)] & b).count(); });
  return count;
}

int edge_boundary_all(const graph& g, const vset& a) {
  vset rest = g.vertex_set() - a;
  int count = 0;
  a.for_each([&](int u) { count += (g.adj_bits[static_cast<std::size_t>(u)] & rest).count(); });
  return count;
}

int vertex_boundary(const graph& g, const vset& a, const vset& b) {
  require_disjoint(a, b);
  int count = 0;
  a.for_each([&](int u) {
    if (g.adj_bits[static_cast<std::size_t>(u)].intersects(b)) ++count;
  });
  b.for_each([&](int v) {
    if (g.adj_bits[static_cast<std::size_t>(v)].intersects(a)) ++count;
  });
  return count;
}

int vertex_boundary_all(const graph& g, const vset& a) {
  return vertex_boundary(g, a, g.vertex_set() - a);
}

std::vector<vset> components(const graph& g) {
  std::vector<vset> out;
  vset seen;
  for (int start = 0; start < g.num_vertices; ++start) {
    if (seen.test(start)) continue;
    vset comp = vset::single(start);
    vset frontier = comp;
    while (!frontier.empty()) {
      vset next;
      frontier.for_each([&](int u) {
        next = next | (g.adj_bits[static_cast<std::size_t>(u)] - comp);
      });
      comp = comp | next;
      frontier = next;
    }
    seen = seen | comp;
    out.push_back(comp);
  }
  // discovery order already sorts by smallest contained vertex
  return out;
}

bool is_connected(const graph& g) { return components(g).size() == 1; }

graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "graph") {
      if (n >= 0) throw error(errc::parse_error, "duplicate graph header");
      if (!(ls >> n) || n < 1)
        throw error(errc::parse_error, "bad graph header at line " + std::to_string(lineno));
    } else if (tag == "e") {
      int u, v;
      if (n < 0) throw error(errc::parse_error, "edge before graph header");
      if (!(ls >> u >> v))
        throw error(errc::parse_error, "bad edge at line " + std::to_string(lineno));
      edges.emplace_back(u, v);
    } else {
      throw error(errc::parse_error, "unknown directive '" + tag + "'");
    }
  }
  if (n < 0) throw error(errc::parse_error, "missing graph header");
  return new_graph(n, edges);
}

std::string serialize_graph(const graph& g) {
  std::ostringstream out;
  out << "graph " << g.num_vertices << "\n";
  for (auto [u, v] : g.edge_list()) out << "e " << u << " " << v << "\n";
  return out.str();
}

graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::io_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void save_graph(const graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error(errc::io_error, "cannot write " + path);
  out << serialize_graph(g);
}

}  // namespace mwiso
