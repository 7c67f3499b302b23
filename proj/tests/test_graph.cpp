#include <doctest.h>

#include <random>

#include "mwiso/cayley.hpp"
#include "mwiso/corpus.hpp"
#include "mwiso/graph.hpp"
#include "oracles.hpp"

using namespace mwiso;

namespace {

graph cycle(int m) { return family_cycle(m).g; }
graph complete(int n) { return family_complete(n).g; }

vset set_of(std::initializer_list<int> xs) {
  vset s;
  for (int x : xs) s.set(x);
  return s;
}

graph random_graph(std::mt19937& rng, int nv, double p) {
  std::vector<std::pair<int, int>> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < nv; ++u)
    for (int v = u + 1; v < nv; ++v)
      if (coin(rng) < p) edges.emplace_back(u, v);
  return new_graph(nv, edges);
}

vset random_subset(std::mt19937& rng, const vset& pool) {
  vset out;
  pool.for_each([&](int v) {
    if (rng() & 1) out.set(v);
  });
  return out;
}

}  // namespace

TEST_CASE("new_graph basics") {
  graph k3 = new_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(k3.num_vertices == 3);
  CHECK(k3.regular_degree == 2);
  CHECK(k3.num_edges() == 3);

  graph dup = new_graph(2, {{0, 1}, {1, 0}});
  CHECK(dup.num_edges() == 1);
  CHECK(dup.regular_degree == 1);

  CHECK_THROWS_AS(new_graph(4, {{0, 0}}), error);
  CHECK_THROWS_AS(new_graph(3, {{0, 5}}), error);
  CHECK_THROWS_AS(new_graph(0, {}), error);
  CHECK_THROWS_AS(new_graph(129, {}), error);

  graph path = new_graph(3, {{0, 1}, {1, 2}});
  CHECK(!path.regular_degree.has_value());
}

TEST_CASE("edge boundaries") {
  graph c4 = cycle(4);
  CHECK(edge_boundary(c4, set_of({0, 1}), set_of({2, 3})) == 2);
  CHECK(edge_boundary(c4, vset{}, c4.vertex_set()) == 0);
  CHECK_THROWS_AS(edge_boundary(c4, set_of({0}), set_of({0, 1})), error);

  graph k4 = complete(4);
  CHECK(edge_boundary(k4, set_of({0}), set_of({1, 2, 3})) == 3);
  CHECK(edge_boundary_all(k4, set_of({0, 1})) == 4);

  graph c6 = cycle(6);
  CHECK(edge_boundary_all(c6, set_of({0, 1, 2})) == 2);
  CHECK(edge_boundary_all(c6, c6.vertex_set()) == 0);
}

TEST_CASE("vertex boundaries") {
  graph c6 = cycle(6);
  CHECK(vertex_boundary(c6, set_of({0, 1, 2}), set_of({3, 4, 5})) == 4);
  CHECK(vertex_boundary_all(c6, set_of({0, 1, 2})) == 4);
  CHECK(vertex_boundary_all(c6, c6.vertex_set()) == 0);

  graph k4 = complete(4);
  CHECK(vertex_boundary(k4, set_of({0}), set_of({1, 2, 3})) == 4);

  graph c4 = cycle(4);
  CHECK(vertex_boundary_all(c4, set_of({0})) == 3);

  // no cross edges between separated components
  graph two = new_graph(4, {{0, 1}, {2, 3}});
  CHECK(vertex_boundary(two, set_of({0, 1}), set_of({2, 3})) == 0);
}

TEST_CASE("components") {
  cayley_result two_triangles = cayley_graph(cyclic_group(6), {2, 4});
  CHECK(!is_connected(two_triangles.g));
  auto comps = components(two_triangles.g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == set_of({0, 2, 4}));
  CHECK(comps[1] == set_of({1, 3, 5}));

  CHECK(is_connected(cycle(6)));
  CHECK(components(new_graph(3, {})).size() == 3);
}

TEST_CASE("boundary identities on random graphs") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 300; ++trial) {
    int nv = 2 + static_cast<int>(rng() % 9);
    graph g = random_graph(rng, nv, 0.4);
    vset all = g.vertex_set();
    vset a = random_subset(rng, all);
    vset b = random_subset(rng, all - a);

    // complement symmetry
    CHECK(edge_boundary_all(g, a) == edge_boundary_all(g, all - a));
    CHECK(vertex_boundary_all(g, a) == vertex_boundary_all(g, all - a));

    // naive recount from the edge list
    int direct = 0;
    for (auto [u, v] : g.edge_list()) {
      if ((a.test(u) && b.test(v)) || (a.test(v) && b.test(u))) ++direct;
    }
    CHECK(edge_boundary(g, a, b) == direct);

    // monotonicity in both arguments
    vset rest = all - a - b;
    vset a2 = a | random_subset(rng, rest);
    vset b2 = b | random_subset(rng, rest - a2);
    CHECK(edge_boundary(g, a, b) <= edge_boundary(g, a2, b2));
    CHECK(vertex_boundary(g, a, b) <= vertex_boundary(g, a2, b2));

    // subadditivity over a disjoint split
    if (!a.empty()) {
      vset a1 = random_subset(rng, a);
      vset a_rest = a - a1;
      CHECK(edge_boundary_all(g, a) <=
            edge_boundary_all(g, a1) + edge_boundary_all(g, a_rest));
      CHECK(vertex_boundary_all(g, a) <=
            vertex_boundary_all(g, a1) + vertex_boundary_all(g, a_rest));
    }

    // intersection bounds, both forms
    vset u1 = random_subset(rng, all), u2 = random_subset(rng, all);
    CHECK(edge_boundary_all(g, u1 & u2) <=
          edge_boundary_all(g, u1) + edge_boundary_all(g, u2));
    CHECK(vertex_boundary_all(g, u1 & u2) <=
          vertex_boundary_all(g, u1) + vertex_boundary_all(g, u2));
    if (!(u1 & u2).empty() && !(u1 - u2).empty()) {
      CHECK(edge_boundary_all(g, u1 & u2) <=
            edge_boundary_all(g, u1) + edge_boundary(g, u1 - u2, u1 & u2));
      CHECK(vertex_boundary_all(g, u1 & u2) <=
            vertex_boundary_all(g, u1) + vertex_boundary(g, u1 - u2, u1 & u2));
    }
  }
}

TEST_CASE("boundary invariance under automorphisms") {
  std::mt19937 rng(7);
  for (const graph& g : {cycle(6), cycle(8), complete(5), petersen_graph()}) {
    auto aut = automorphism_group(g);
    vset all = g.vertex_set();
    for (int trial = 0; trial < 50; ++trial) {
      vset a = random_subset(rng, all);
      vset b = random_subset(rng, all - a);
      const perm& p = aut.elements[rng() % aut.order()];
      CHECK(edge_boundary(g, a, b) == edge_boundary(g, apply_set(p, a), apply_set(p, b)));
      CHECK(vertex_boundary(g, a, b) ==
            vertex_boundary(g, apply_set(p, a), apply_set(p, b)));
    }
  }
}

TEST_CASE("graph text format round trip") {
  for (const graph& g : {cycle(6), complete(4), petersen_graph(), new_graph(3, {})}) {
    std::string text = serialize_graph(g);
    graph back = parse_graph(text);
    CHECK(back.num_vertices == g.num_vertices);
    CHECK(back.edge_list() == g.edge_list());
    CHECK(serialize_graph(back) == text);  // bit-exact
  }

  graph g = parse_graph("# comment\ngraph 3\ne 0 1 # trailing\n\ne 1 2\n");
  CHECK(g.num_edges() == 2);

  CHECK_THROWS_AS(parse_graph("e 0 1\n"), error);
  CHECK_THROWS_AS(parse_graph("graph 3\nxx 1 2\n"), error);
  CHECK_THROWS_AS(parse_graph(""), error);
  CHECK_THROWS_AS(parse_graph("graph 2\ne 0 0\n"), error);
}
