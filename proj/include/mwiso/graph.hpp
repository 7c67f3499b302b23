#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mwiso/error.hpp"
#include "mwiso/vset.hpp"

namespace mwiso {

/// Simple undirected graph on at most 128 vertices. Adjacency is kept both as
/// sorted neighbor lists and as per-vertex bitsets so that boundary counts are
/// popcount-based inside enumeration loops. Immutable after construction.
struct graph {
  int num_vertices = 0;
  std::vector<std::vector<int>> adjacency;  // sorted neighbor lists
  std::vector<vset> adj_bits;               // adjacency[v] as a bitset
  std::vector<int> degree_sequence;
  std::optional<int> regular_degree;  // present iff all degrees equal

  bool adjacent(int u, int v) const { return adj_bits[u].test(v); }
  vset vertex_set() const { return vset::full(num_vertices); }
  std::size_t num_edges() const;
  std::vector<std::pair<int, int>> edge_list() const;  // u < v, sorted
};

/// Builds a graph from an edge list. Duplicate edges and (u,v)/(v,u) pairs
/// collapse to one edge. Throws self_loop, vertex_out_of_range,
/// graph_too_large (|V| > 128) or param_out_of_range (|V| < 1).
graph new_graph(int num_vertices, const std::vector<std::pair<int, int>>& edges);

/// |∂(A,B)|: edges with one endpoint in a, the other in b. a, b must be disjoint.
int edge_boundary(const graph& g, const vset& a, const vset& b);

/// |∂A| = |∂(A, V∖A)|.
int edge_boundary_all(const graph& g, const vset& a);

/// |δ(A,B)|: vertices of a with a neighbor in b, plus vertices of b with a
/// neighbor in a. a, b must be disjoint.
int vertex_boundary(const graph& g, const vset& a, const vset& b);

/// |δA| = |δ(A, V∖A)|.
int vertex_boundary_all(const graph& g, const vset& a);

bool is_connected(const graph& g);

/// Connected components, sorted by their smallest contained vertex.
std::vector<vset> components(const graph& g);

/// Text format: `#` comments, header `graph <n>`, then `e <u> <v>` lines.
graph parse_graph(const std::string& text);
std::string serialize_graph(const graph& g);
graph load_graph(const std::string& path);
void save_graph(const graph& g, const std::string& path);

}  // namespace mwiso
