#include "mwiso/perm.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace mwiso {

perm::perm(std::vector<int> images) : img(std::move(images)) {
  std::vector<char> seen(img.size(), 0);
  for (int x : img) {
    if (x < 0 || static_cast<std::size_t>(x) >= img.size() || seen[static_cast<std::size_t>(x)])
      throw error(errc::invalid_permutation, "images are not a bijection");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

perm perm::identity(int k) {
  perm p;
  p.img.resize(static_cast<std::size_t>(k));
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

perm perm::compose(const perm& q) const {
  if (size() != q.size()) throw error(errc::domain_mismatch, "composing unequal domains");
  perm r;
  r.img.resize(img.size());
  for (std::size_t x = 0; x < img.size(); ++x)
    r.img[x] = img[static_cast<std::size_t>(q.img[x])];
  return r;
}

perm perm::inverse() const {
  perm r;
  r.img.resize(img.size());
  for (std::size_t x = 0; x < img.size(); ++x) r.img[static_cast<std::size_t>(img[x])] = static_cast<int>(x);
  return r;
}

bool perm::is_identity() const {
  for (std::size_t x = 0; x < img.size(); ++x)
    if (img[x] != static_cast<int>(x)) return false;
  return true;
}

vset apply_set(const perm& p, const vset& s) {
  vset out;
  s.for_each([&](int v) { out.set(p[v]); });
  return out;
}

namespace {

struct perm_hash {
  std::size_t operator()(const perm& p) const {
    std::size_t h = 1469598103934665603ULL;
    for (int x : p.img) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ULL;
    }
    return h;
  }
};

}  // namespace

int perm_group::element_index(const perm& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it == elements.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elements.begin());
}

perm_group generate_group(std::vector<perm> gens, std::size_t cap) {
  int domain = gens.empty() ? 0 : gens[0].size();
  for (const auto& g : gens)
    if (g.size() != domain) throw error(errc::domain_mismatch, "generator domains differ");

  perm_group gr;
  gr.domain = domain;
  gr.generators = gens;

  std::unordered_set<perm, perm_hash> seen;
  std::queue<perm> frontier;
  perm id = perm::identity(domain);
  seen.insert(id);
  frontier.push(id);
  while (!frontier.empty()) {
    perm cur = frontier.front();
    frontier.pop();
    for (const auto& g : gens) {
      perm next = g.compose(cur);
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw error(errc::group_too_large, "closure exceeds cap " + std::to_string(cap));
        frontier.push(next);
      }
    }
  }
  gr.elements.assign(seen.begin(), seen.end());
  std::sort(gr.elements.begin(), gr.elements.end());
  return gr;
}

perm_group group_from_elements(std::vector<perm> elements) {
  if (elements.empty()) throw error(errc::invalid_permutation, "empty element list");
  perm_group gr;
  gr.domain = elements[0].size();
  for (const auto& p : elements)
    if (p.size() != gr.domain) throw error(errc::domain_mismatch, "element domains differ");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  gr.elements = elements;
  gr.generators = gr.elements;
  return gr;
}

bool is_automorphism(const graph& g, const perm& p) {
  if (p.size() != g.num_vertices) return false;
  for (int u = 0; u < g.num_vertices; ++u) {
    vset image = apply_set(p, g.adj_bits[static_cast<std::size_t>(u)]);
    if (!(image == g.adj_bits[static_cast<std::size_t>(p[u])])) return false;
  }
  return true;
}

namespace {

void auto_search(const graph& g, std::vector<int>& img, vset used, int depth,
                 std::vector<perm>& found, std::size_t cap) {
  int n = g.num_vertices;
  if (depth == n) {
    found.emplace_back(perm{std::vector<int>(img)});
    if (found.size() > cap)
      throw error(errc::group_too_large, "automorphism group exceeds cap");
    return;
  }
  for (int cand = 0; cand < n; ++cand) {
    if (used.test(cand)) continue;
    if (g.degree_sequence[static_cast<std::size_t>(cand)] !=
        g.degree_sequence[static_cast<std::size_t>(depth)])
      continue;
    bool ok = true;
    for (int u = 0; u < depth && ok; ++u)
      if (g.adjacent(u, depth) != g.adjacent(img[static_cast<std::size_t>(u)], cand)) ok = false;
    if (!ok) continue;
    img[static_cast<std::size_t>(depth)] = cand;
    vset used2 = used;
    used2.set(cand);
    auto_search(g, img, used2, depth + 1, found, cap);
  }
}

}  // namespace

perm_group automorphism_group(const graph& g, std::size_t cap) {
  std::vector<perm> found;
  std::vector<int> img(static_cast<std::size_t>(g.num_vertices), -1);
  auto_search(g, img, vset{}, 0, found, cap);
  for (const auto& p : found)
    if (!is_automorphism(g, p))
      throw error(errc::internal_invariant, "backtracking produced a non-automorphism");
  return group_from_elements(std::move(found));
}

vset orbit(const perm_group& gr, int v) {
  if (v < 0 || v >= gr.domain) throw error(errc::vertex_out_of_range, "orbit point");
  vset out;
  for (const auto& p : gr.elements) out.set(p[v]);
  return out;
}

perm_group stabilizer(const perm_group& gr, int v) {
  std::vector<perm> fix;
  for (const auto& p : gr.elements)
    if (p[v] == v) fix.push_back(p);
  return group_from_elements(std::move(fix));
}

bool is_transitive(const perm_group& gr) {
  if (gr.domain == 0) return false;
  return orbit(gr, 0).count() == gr.domain;
}

partition::partition(std::vector<int> labels, int num_parts)
    : part_of(std::move(labels)), parts(num_parts) {
  if (parts < 1) throw error(errc::invalid_partition, "need at least one part");
  std::vector<int> count(static_cast<std::size_t>(parts), 0);
  for (int p : part_of) {
    if (p < 0 || p >= parts) throw error(errc::invalid_partition, "label out of range");
    ++count[static_cast<std::size_t>(p)];
  }
  for (int c : count)
    if (c == 0) throw error(errc::invalid_partition, "empty part");
}

std::vector<vset> partition::part_sets() const {
  std::vector<vset> out(static_cast<std::size_t>(parts));
  for (std::size_t v = 0; v < part_of.size(); ++v)
    out[static_cast<std::size_t>(part_of[v])].set(static_cast<int>(v));
  return out;
}

partition partition::canonical() const {
  std::vector<int> relabel(static_cast<std::size_t>(parts), -1);
  std::vector<int> labels(part_of.size());
  int next = 0;
  for (std::size_t v = 0; v < part_of.size(); ++v) {
    int& r = relabel[static_cast<std::size_t>(part_of[v])];
    if (r < 0) r = next++;
    labels[v] = r;
  }
  return partition(std::move(labels), parts);
}

bool partition::is_canonical() const { return canonical() == *this; }

bool is_block_system(const perm_group& gr, const partition& p) {
  if (p.size() != gr.domain) throw error(errc::domain_mismatch, "partition vs group domain");
  auto sets = p.part_sets();
  for (const auto& g : gr.generators) {
    for (const auto& b : sets) {
      vset image = apply_set(g, b);
      int target = p.part_of[static_cast<std::size_t>(image.first())];
      if (!(image == sets[static_cast<std::size_t>(target)])) return false;
    }
  }
  return true;
}

namespace {

struct union_find {
  std::vector<int> parent;
  explicit union_find(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

/// Finest G-congruence identifying all vertices of `seed`; returns the class
/// of the smallest seed vertex.
vset minimal_block(const perm_group& gr, const vset& seed) {
  union_find uf(gr.domain);
  int v0 = seed.first();
  seed.for_each([&](int v) { uf.unite(v0, v); });
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& g : gr.generators)
      for (int v = 0; v < gr.domain; ++v)
        if (uf.unite(g[v], g[uf.find(v)])) changed = true;
  }
  vset block;
  int root = uf.find(v0);
  for (int v = 0; v < gr.domain; ++v)
    if (uf.find(v) == root) block.set(v);
  return block;
}

partition system_from_block(const perm_group& gr, const vset& block) {
  std::vector<int> labels(static_cast<std::size_t>(gr.domain), -1);
  std::vector<vset> blocks;
  for (const auto& g : gr.elements) {
    vset image = apply_set(g, block);
    int lead = image.first();
    if (labels[static_cast<std::size_t>(lead)] >= 0) continue;
    int id = static_cast<int>(blocks.size());
    image.for_each([&](int v) {
      if (labels[static_cast<std::size_t>(v)] >= 0)
        throw error(errc::internal_invariant, "block orbit does not tile the domain");
      labels[static_cast<std::size_t>(v)] = id;
    });
    blocks.push_back(image);
  }
  for (int v = 0; v < gr.domain; ++v)
    if (labels[static_cast<std::size_t>(v)] < 0)
      throw error(errc::internal_invariant, "block orbit misses a vertex");
  return partition(std::move(labels), static_cast<int>(blocks.size())).canonical();
}

}  // namespace

std::vector<block_system> block_systems_of_size(const perm_group& gr, int n) {
  if (!is_transitive(gr)) throw error(errc::not_transitive, "group is not transitive");
  std::vector<block_system> out;
  if (n < 1 || gr.domain % n != 0) return out;
  if (n == 1) {
    out.push_back({partition(std::vector<int>(static_cast<std::size_t>(gr.domain), 0), 1)});
    return out;
  }
  if (n == gr.domain) {
    std::vector<int> labels(static_cast<std::size_t>(gr.domain));
    std::iota(labels.begin(), labels.end(), 0);
    out.push_back({partition(std::move(labels), gr.domain)});
    return out;
  }

  // Blocks containing vertex 0 form a join-closed lattice whose atoms are the
  // minimal blocks of pairs {0,w}; enumerate the closure of the atoms.
  std::vector<vset> atoms;
  for (int w = 1; w < gr.domain; ++w) {
    vset seed = vset::single(0) | vset::single(w);
    vset b = minimal_block(gr, seed);
    if (std::find(atoms.begin(), atoms.end(), b) == atoms.end()) atoms.push_back(b);
  }
  std::unordered_set<vset, vset_hash> known(atoms.begin(), atoms.end());
  std::vector<vset> worklist(atoms.begin(), atoms.end());
  for (std::size_t i = 0; i < worklist.size(); ++i) {
    for (const auto& a : atoms) {
      if (worklist[i].contains(a)) continue;
      vset joined = minimal_block(gr, worklist[i] | a);
      if (known.insert(joined).second) worklist.push_back(joined);
    }
  }

  int block_size = gr.domain / n;
  std::vector<partition> systems;
  for (const auto& b : worklist)
    if (b.count() == block_size) systems.push_back(system_from_block(gr, b));
  std::sort(systems.begin(), systems.end(), [](const partition& a, const partition& b) {
    return vset_lex_less(a.part_sets()[0], b.part_sets()[0]);
  });
  systems.erase(std::unique(systems.begin(), systems.end()), systems.end());
  for (auto& s : systems) out.push_back({std::move(s)});
  return out;
}

namespace {

using elem_set = std::vector<std::uint64_t>;

struct elem_set_hash {
  std::size_t operator()(const elem_set& s) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : s) {
      h ^= static_cast<std::size_t>(w);
      h *= 1099511628211ULL;
    }
    return h;
  }
};

}  // namespace

bool has_subgroup_of_index(const perm_group& gr, int n, std::size_t cap) {
  std::size_t order = gr.order();
  if (order > cap)
    throw error(errc::group_too_large,
                "subgroup search capped at order " + std::to_string(cap));
  if (n < 1) throw error(errc::param_out_of_range, "index must be positive");
  if (order % static_cast<std::size_t>(n) != 0) return false;  // Lagrange
  std::size_t target = order / static_cast<std::size_t>(n);
  if (target == order) return true;  // the whole group

  // index-based multiplication table
  std::size_t m = order;
  std::vector<int> mul(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      int idx = gr.element_index(gr.elements[a].compose(gr.elements[b]));
      if (idx < 0) throw error(errc::internal_invariant, "element list not closed");
      mul[a * m + b] = idx;
    }

  std::size_t words = (m + 63) / 64;
  auto set_bit = [&](elem_set& s, std::size_t i) { s[i / 64] |= 1ULL << (i % 64); };
  auto test_bit = [&](const elem_set& s, std::size_t i) {
    return (s[i / 64] >> (i % 64)) & 1;
  };

  int identity_idx = gr.element_index(perm::identity(gr.domain));

  // closure of a member list under the table; empty result if it grows past target
  auto close = [&](std::vector<int> members) -> std::pair<elem_set, std::vector<int>> {
    elem_set bits(words, 0);
    std::vector<int> list;
    auto add = [&](int e) {
      if (!test_bit(bits, static_cast<std::size_t>(e))) {
        set_bit(bits, static_cast<std::size_t>(e));
        list.push_back(e);
      }
    };
    add(identity_idx);
    for (int e : members) add(e);
    // pair (i,j<=i) is reached once the later of the two enters the list, so
    // the scan closes under products in both orders
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        add(mul[static_cast<std::size_t>(list[i]) * m + static_cast<std::size_t>(list[j])]);
        add(mul[static_cast<std::size_t>(list[j]) * m + static_cast<std::size_t>(list[i])]);
        if (list.size() > target) return {{}, {}};
      }
    }
    return {bits, list};
  };

  std::unordered_set<elem_set, elem_set_hash> known;
  std::vector<std::vector<int>> frontier;

  // cyclic subgroups first
  for (std::size_t e = 0; e < m; ++e) {
    auto [bits, list] = close({static_cast<int>(e)});
    if (list.empty()) continue;
    if (target % list.size() != 0) continue;  // cannot sit inside an index-n subgroup
    if (list.size() == target) return true;
    if (known.insert(bits).second) frontier.push_back(list);
  }

  // grow by adjoining single elements
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    std::vector<int> base = frontier[i];
    for (std::size_t e = 0; e < m; ++e) {
      std::vector<int> members = base;
      members.push_back(static_cast<int>(e));
      auto [bits, list] = close(std::move(members));
      if (list.empty()) continue;
      if (target % list.size() != 0) continue;
      if (list.size() == target) return true;
      if (known.insert(bits).second) frontier.push_back(list);
    }
  }
  return false;
}

std::vector<perm> parse_perms(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<perm> out;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag != "perm")
      throw error(errc::parse_error, "unknown directive '" + tag + "'");
    std::vector<int> img;
    int x;
    while (ls >> x) img.push_back(x);
    try {
      out.emplace_back(std::move(img));
    } catch (const error&) {
      throw error(errc::parse_error, "invalid permutation at line " + std::to_string(lineno));
    }
  }
  if (out.empty()) throw error(errc::parse_error, "no permutations found");
  for (const auto& p : out)
    if (p.size() != out[0].size())
      throw error(errc::parse_error, "permutation domains differ");
  return out;
}

std::string serialize_perms(const std::vector<perm>& ps) {
  std::ostringstream out;
  for (const auto& p : ps) {
    out << "perm";
    for (int x : p.img) out << " " << x;
    out << "\n";
  }
  return out.str();
}

std::vector<perm> load_perms(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::io_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_perms(buf.str());
}

void save_perms(const std::vector<perm>& ps, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error(errc::io_error, "cannot write " + path);
  out << serialize_perms(ps);
}

partition parse_partition(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag != "part") throw error(errc::parse_error, "unknown directive '" + tag + "'");
    std::vector<int> labels;
    int x;
    while (ls >> x) labels.push_back(x);
    if (labels.empty()) throw error(errc::parse_error, "empty partition line");
    int parts = *std::max_element(labels.begin(), labels.end()) + 1;
    try {
      return partition(std::move(labels), parts);
    } catch (const error& e) {
      throw error(errc::parse_error, e.what());
    }
  }
  throw error(errc::parse_error, "no partition found");
}

std::string serialize_partition(const partition& p) {
  std::ostringstream out;
  out << "part";
  for (int x : p.part_of) out << " " << x;
  out << "\n";
  return out.str();
}

}  // namespace mwiso
