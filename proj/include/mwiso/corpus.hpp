#pragma once

#include <string>
#include <vector>

#include "mwiso/cayley.hpp"
#include "mwiso/graph.hpp"
#include "mwiso/perm.hpp"
#include "mwiso/report.hpp"

namespace mwiso {

struct corpus_instance {
  std::string name;
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;
  graph g;
  perm_group group;              // natural transitive action
  bool vertex_transitive = false;
  bool edge_transitive_suite = false;  // uses Aut(g), computed on demand

  instance_desc desc() const { return instance_desc{name, family, params}; }
};

/// Deterministic built-in instance set: cycles, complete graphs, Petersen,
/// the 3-cube, disjoint-union Cayley graphs, the named product families at
/// small parameters, and Cayley graphs of S4.
const std::vector<corpus_instance>& builtin_corpus();

graph petersen_graph();
graph hypercube_graph(int dim);

}  // namespace mwiso
