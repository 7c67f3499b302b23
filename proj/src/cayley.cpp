#include "mwiso/cayley.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mwiso {

group_table make_group_table(int order, std::vector<int> mul) {
  if (order < 1) throw error(errc::param_out_of_range, "group order must be positive");
  if (mul.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order))
    throw error(errc::bad_group_table, "multiplication table has wrong size");
  for (int x : mul)
    if (x < 0 || x >= order) throw error(errc::bad_group_table, "entry out of range");

  group_table t;
  t.order = order;
  t.mul = std::move(mul);

  // identity: the unique e with e*x = x*e = x
  int id = -1;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x)
      if (t.times(e, x) != x || t.times(x, e) != x) ok = false;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw error(errc::bad_group_table, "no identity element");
  t.identity = id;

  t.inv.assign(static_cast<std::size_t>(order), -1);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y)
      if (t.times(x, y) == id && t.times(y, x) == id) {
        t.inv[static_cast<std::size_t>(x)] = y;
        break;
      }
    if (t.inv[static_cast<std::size_t>(x)] < 0)
      throw error(errc::bad_group_table, "element without inverse");
  }

  if (order <= 64) {
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        for (int c = 0; c < order; ++c)
          if (t.times(t.times(a, b), c) != t.times(a, t.times(b, c)))
            throw error(errc::bad_group_table, "associativity fails");
  }
  return t;
}

group_table cyclic_group(int k) {
  if (k < 1) throw error(errc::param_out_of_range, "cyclic group order must be >= 1");
  std::vector<int> mul(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      mul[static_cast<std::size_t>(a) * static_cast<std::size_t>(k) +
          static_cast<std::size_t>(b)] = (a + b) % k;
  return make_group_table(k, std::move(mul));
}

group_table dihedral_group(int n) {
  if (n < 2) throw error(errc::param_out_of_range, "dihedral parameter must be >= 2");
  int order = 2 * n;
  auto idx = [n](bool reflected, int i) { return (reflected ? n : 0) + ((i % n + n) % n); };
  std::vector<int> mul(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
  // r^i * r^j = r^{i+j}; r^i * r^j a = r^{i+j} a; r^i a * r^j = r^{i-j} a;
  // r^i a * r^j a = r^{i-j}
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      bool xr = x >= n, yr = y >= n;
      int i = x % n, j = y % n;
      int out = xr ? (yr ? idx(false, i - j) : idx(true, i - j))
                   : (yr ? idx(true, i + j) : idx(false, i + j));
      mul[static_cast<std::size_t>(x) * static_cast<std::size_t>(order) +
          static_cast<std::size_t>(y)] = out;
    }
  return make_group_table(order, std::move(mul));
}

int dihedral_a(int n) { return n; }          // (ab)^0 a
int dihedral_b(int n) { return 2 * n - 1; }  // b = (ab)^{n-1} a

group_table product_group(const group_table& a, const group_table& b) {
  int order = a.order * b.order;
  if (order > 4096) throw error(errc::param_out_of_range, "product group too large");
  std::vector<int> mul(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      int xa = x / b.order, xb = x % b.order;
      int ya = y / b.order, yb = y % b.order;
      mul[static_cast<std::size_t>(x) * static_cast<std::size_t>(order) +
          static_cast<std::size_t>(y)] = a.times(xa, ya) * b.order + b.times(xb, yb);
    }
  return make_group_table(order, std::move(mul));
}

std::vector<perm> symmetric_group_elements(int k) {
  std::vector<int> img(static_cast<std::size_t>(k));
  std::iota(img.begin(), img.end(), 0);
  std::vector<perm> out;
  do {
    out.emplace_back(std::vector<int>(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

int symmetric_group_index(int k, const perm& p) {
  auto elems = symmetric_group_elements(k);
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (elems[i] == p) return static_cast<int>(i);
  throw error(errc::invalid_permutation, "not an element of the symmetric group");
}

group_table symmetric_group_table(int k) {
  if (k < 1 || k > 5) throw error(errc::param_out_of_range, "symmetric group table for k in 1..5");
  auto elems = symmetric_group_elements(k);  // already in lexicographic order
  int order = static_cast<int>(elems.size());
  std::vector<int> mul(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      perm prod = elems[static_cast<std::size_t>(x)].compose(elems[static_cast<std::size_t>(y)]);
      auto it = std::lower_bound(elems.begin(), elems.end(), prod);
      mul[static_cast<std::size_t>(x) * static_cast<std::size_t>(order) +
          static_cast<std::size_t>(y)] = static_cast<int>(it - elems.begin());
    }
  return make_group_table(order, std::move(mul));
}

cayley_result cayley_graph(const group_table& tbl, const std::vector<int>& s) {
  std::set<int> sset(s.begin(), s.end());
  for (int x : sset) {
    if (x < 0 || x >= tbl.order)
      throw error(errc::param_out_of_range, "generator index out of range");
    if (x == tbl.identity)
      throw error(errc::contains_identity, "connection set contains the identity");
    if (!sset.count(tbl.inv[static_cast<std::size_t>(x)]))
      throw error(errc::not_symmetric, "connection set is not closed under inverses");
  }
  if (tbl.order > vset::max_bits)
    throw error(errc::graph_too_large, "group order exceeds vertex cap");

  std::vector<std::pair<int, int>> edges;
  for (int g = 0; g < tbl.order; ++g)
    for (int x : sset) edges.emplace_back(g, tbl.times(g, x));

  cayley_result out;
  out.g = new_graph(tbl.order, edges);

  std::vector<perm> left;
  left.reserve(static_cast<std::size_t>(tbl.order));
  for (int a = 0; a < tbl.order; ++a) {
    std::vector<int> img(static_cast<std::size_t>(tbl.order));
    for (int x = 0; x < tbl.order; ++x) img[static_cast<std::size_t>(x)] = tbl.times(a, x);
    left.emplace_back(std::move(img));
  }
  out.action = group_from_elements(std::move(left));
  return out;
}

cayley_result family_fattened_cycle(int m, int k) {
  if (m < 3 || k < 2) throw error(errc::param_out_of_range, "need m >= 3, k >= 2");
  group_table g = product_group(cyclic_group(m), cyclic_group(k));
  // S = {±1} x Z/k: the stated one-sided set symmetrized so the graph is an
  // undirected regular thick cycle
  std::vector<int> s;
  for (int t = 0; t < k; ++t) {
    s.push_back(1 * k + t);
    s.push_back((m - 1) * k + t);
  }
  return cayley_graph(g, s);
}

cayley_result family_k2_product(int n_cap) {
  if (n_cap < 3) throw error(errc::param_out_of_range, "need N >= 3");
  group_table g = product_group(cyclic_group(n_cap), cyclic_group(2));
  std::vector<int> s;
  for (int t = 1; t < n_cap; ++t) s.push_back(t * 2 + 0);  // T x {0}
  s.push_back(0 * 2 + 1);                                  // (e, 1)
  return cayley_graph(g, s);
}

partition k2_product_designated_partition(int n_cap) {
  std::vector<int> labels(static_cast<std::size_t>(2 * n_cap));
  for (int h = 0; h < n_cap; ++h)
    for (int z = 0; z < 2; ++z) labels[static_cast<std::size_t>(h * 2 + z)] = z;
  return partition(std::move(labels), 2).canonical();
}

cayley_result family_dihedral_product(int n_cap, int n) {
  if (n_cap < 3 || n < 3) throw error(errc::param_out_of_range, "need N >= 3, n >= 3");
  group_table d = dihedral_group(n);
  group_table g = product_group(cyclic_group(n_cap), d);
  int dn = d.order;
  std::vector<int> s;
  for (int t = 1; t < n_cap; ++t) {
    s.push_back(t * dn + d.identity);      // (t, e)
    s.push_back(t * dn + dihedral_a(n));   // (t, a)
  }
  s.push_back(0 * dn + dihedral_b(n));     // (e, b)
  return cayley_graph(g, s);
}

partition dihedral_product_designated_partition(int n_cap, int n) {
  int dn = 2 * n;
  std::vector<int> labels(static_cast<std::size_t>(n_cap * dn));
  for (int h = 0; h < n_cap; ++h)
    for (int x = 0; x < dn; ++x)
      labels[static_cast<std::size_t>(h * dn + x)] = x % n;  // (ab)^i and (ab)^i a share i
  return partition(std::move(labels), n).canonical();
}

cayley_result family_cycle(int m) {
  if (m < 3) throw error(errc::param_out_of_range, "need m >= 3");
  return cayley_graph(cyclic_group(m), {1, m - 1});
}

cayley_result family_complete(int n_cap) {
  if (n_cap < 2) throw error(errc::param_out_of_range, "need N >= 2");
  std::vector<int> s;
  for (int t = 1; t < n_cap; ++t) s.push_back(t);
  return cayley_graph(cyclic_group(n_cap), s);
}

}  // namespace mwiso
