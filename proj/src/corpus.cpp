#include "mwiso/corpus.hpp"

namespace mwiso {

graph petersen_graph() {
  // vertices = 2-subsets of {0..4} in lexicographic order; edges join disjoint pairs
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return new_graph(10, edges);
}

graph hypercube_graph(int dim) {
  int n = 1 << dim;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b)
      if (!(v & (1 << b))) edges.emplace_back(v, v | (1 << b));
  return new_graph(n, edges);
}

namespace {

corpus_instance from_cayley(std::string name, std::string family,
                            std::vector<std::pair<std::string, std::string>> params,
                            cayley_result cr, bool edge_suite = false) {
  corpus_instance inst;
  inst.name = std::move(name);
  inst.family = std::move(family);
  inst.params = std::move(params);
  inst.g = std::move(cr.g);
  inst.group = std::move(cr.action);
  inst.vertex_transitive = true;
  inst.edge_transitive_suite = edge_suite;
  return inst;
}

std::vector<corpus_instance> build() {
  std::vector<corpus_instance> out;

  for (int m = 5; m <= 12; ++m)
    out.push_back(from_cayley("cycle-" + std::to_string(m), "cycle",
                              {{"m", std::to_string(m)}}, family_cycle(m), m == 6));

  for (int n = 3; n <= 6; ++n)
    out.push_back(from_cayley("complete-" + std::to_string(n), "complete",
                              {{"N", std::to_string(n)}}, family_complete(n),
                              n == 4 || n == 5));

  {
    corpus_instance inst;
    inst.name = "petersen";
    inst.family = "petersen";
    inst.g = petersen_graph();
    inst.group = automorphism_group(inst.g);
    inst.vertex_transitive = true;
    inst.edge_transitive_suite = true;
    out.push_back(std::move(inst));
  }

  {
    // 3-cube as a Cayley graph of (Z/2)^3 = Z/2 x Z/2 x Z/2
    group_table z2 = cyclic_group(2);
    group_table z2c = product_group(product_group(z2, z2), z2);
    // generators 100, 010, 001 under the row-major indexing
    out.push_back(from_cayley("hypercube-3", "hypercube", {{"dim", "3"}},
                              cayley_graph(z2c, {4, 2, 1}), true));
  }

  // disjoint-union Cayley graphs (the gap instances: n components, h_n = 0)
  out.push_back(from_cayley("two-triangles", "disjoint-union", {{"components", "2"}},
                            cayley_graph(cyclic_group(6), {2, 4})));
  out.push_back(from_cayley("three-edges", "disjoint-union", {{"components", "3"}},
                            cayley_graph(cyclic_group(6), {3})));
  out.push_back(from_cayley("two-squares", "disjoint-union", {{"components", "2"}},
                            cayley_graph(cyclic_group(8), {2, 6})));
  out.push_back(from_cayley("three-triangles", "disjoint-union", {{"components", "3"}},
                            cayley_graph(cyclic_group(9), {3, 6})));
  out.push_back(from_cayley("two-k4", "disjoint-union", {{"components", "2"}},
                            cayley_graph(cyclic_group(8), {2, 4, 6})));

  out.push_back(from_cayley("fattened-cycle-3-2", "fattened-cycle",
                            {{"m", "3"}, {"k", "2"}}, family_fattened_cycle(3, 2)));
  out.push_back(from_cayley("fattened-cycle-6-2", "fattened-cycle",
                            {{"m", "6"}, {"k", "2"}}, family_fattened_cycle(6, 2)));
  out.push_back(from_cayley("k2-product-3", "k2-product", {{"N", "3"}},
                            family_k2_product(3)));
  out.push_back(from_cayley("k2-product-6", "k2-product", {{"N", "6"}},
                            family_k2_product(6)));
  out.push_back(from_cayley("dihedral-product-3-3", "dihedral-product",
                            {{"N", "3"}, {"n", "3"}}, family_dihedral_product(3, 3)));

  {
    group_table s4 = symmetric_group_table(4);
    auto idx = [&](std::vector<int> img) {
      return symmetric_group_index(4, perm(std::move(img)));
    };
    int t01 = idx({1, 0, 2, 3});
    int t12 = idx({0, 2, 1, 3});
    int t23 = idx({0, 1, 3, 2});
    int t02 = idx({2, 1, 0, 3});
    int t03 = idx({3, 1, 2, 0});
    out.push_back(from_cayley("sym4-adjacent-transpositions", "cayley",
                              {{"group", "sym:4"}, {"gens", "adjacent-transpositions"}},
                              cayley_graph(s4, {t01, t12, t23})));
    out.push_back(from_cayley("sym4-star-transpositions", "cayley",
                              {{"group", "sym:4"}, {"gens", "star-transpositions"}},
                              cayley_graph(s4, {t01, t02, t03})));
  }

  return out;
}

}  // namespace

const std::vector<corpus_instance>& builtin_corpus() {
  static const std::vector<corpus_instance> corpus = build();
  return corpus;
}

}  // namespace mwiso
