#include <doctest.h>

#include "mwiso/cayley.hpp"
#include "mwiso/corpus.hpp"
#include "mwiso/phi.hpp"

using namespace mwiso;

namespace {

perm rotation(int k, int shift) {
  std::vector<int> img(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) img[static_cast<std::size_t>(i)] = (i + shift) % k;
  return perm(img);
}

cayley_result two_triangles() { return cayley_graph(cyclic_group(6), {2, 4}); }
cayley_result three_edges() { return cayley_graph(cyclic_group(6), {3}); }

}  // namespace

TEST_CASE("build_gap_instance") {
  auto tt = two_triangles();
  gap_outcome gap = build_gap_instance(tt.g, tt.action, 2, iso_mode::h);
  REQUIRE(gap.gap());
  CHECK(gap.low == ratio());
  CHECK(gap.high == ratio(2, 1));
  CHECK(gap.instance->realizer == partition({0, 1, 0, 1, 0, 1}, 2));

  auto c6 = family_cycle(6);
  gap_outcome no_gap = build_gap_instance(c6.g, c6.action, 2, iso_mode::h);
  CHECK(!no_gap.gap());
  CHECK(no_gap.low == ratio(2, 3));
  CHECK(no_gap.high == ratio(1, 1));  // 1 <= 6 * 2/3

  auto k4 = family_complete(4);
  CHECK(!build_gap_instance(k4.g, k4.action, 2, iso_mode::h).gap());

  CHECK_THROWS_AS(build_gap_instance(tt.g, tt.action, 1, iso_mode::h), error);
  CHECK_THROWS_AS(build_gap_instance(tt.g, tt.action, 6, iso_mode::h), error);
  // trivial action is not transitive
  CHECK_THROWS_AS(
      build_gap_instance(tt.g, generate_group({perm::identity(6)}), 2, iso_mode::h), error);
  // transitive action that does not preserve the edges
  graph path6 = new_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK_THROWS_AS(
      build_gap_instance(path6, generate_group({rotation(6, 1)}), 2, iso_mode::h), error);
}

TEST_CASE("build_gap_instance with a supplied realizer") {
  auto tt = two_triangles();
  partition comps({0, 1, 0, 1, 0, 1}, 2);
  gap_outcome gap = build_gap_instance(tt.g, tt.action, 2, iso_mode::h, comps);
  CHECK(gap.gap());

  partition bad({0, 0, 0, 1, 1, 1}, 2);  // cuts both triangles, ratio > 0
  CHECK_THROWS_AS(build_gap_instance(tt.g, tt.action, 2, iso_mode::h, bad), error);
}

TEST_CASE("classify_overlap") {
  auto tt = two_triangles();
  gap_instance inst = *build_gap_instance(tt.g, tt.action, 2, iso_mode::h).instance;

  perm id = perm::identity(6);
  CHECK(classify_overlap(inst, id, 0, 0) == overlap::close);
  CHECK(classify_overlap(inst, id, 1, 1) == overlap::close);
  CHECK(classify_overlap(inst, id, 0, 1) == overlap::far);

  // shift by one swaps the triangles: close to the other part only
  int shifted = 0;
  perm shift = rotation(6, 1);
  for (int k = 0; k < 2; ++k)
    if (classify_overlap(inst, shift, 0, k) == overlap::close) {
      ++shifted;
      CHECK(k == 1);
    }
  CHECK(shifted == 1);
}

TEST_CASE("build_phi on two triangles") {
  auto tt = two_triangles();
  gap_instance inst = *build_gap_instance(tt.g, tt.action, 2, iso_mode::h).instance;
  phi_result phi = build_phi(inst);

  CHECK(phi.l == 2);
  CHECK(phi.induced_transitive);
  CHECK(phi.closeness_bound == ratio());
  // sigma is the parity homomorphism: shift by odd = swap, even = identity
  for (std::size_t gi = 0; gi < inst.group.order(); ++gi) {
    const perm& g = inst.group.elements[gi];
    bool odd = (g[0] % 2) == 1;
    CHECK(phi.sigma[gi] == (odd ? perm({1, 0}) : perm({0, 1})));
    for (int j = 0; j < 2; ++j) CHECK(phi.closeness[gi][static_cast<std::size_t>(j)] == 0);
  }
  int id_idx = inst.group.element_index(perm::identity(6));
  CHECK(phi.sigma[static_cast<std::size_t>(id_idx)].is_identity());
}

TEST_CASE("build_phi on three disjoint edges") {
  auto te = three_edges();
  gap_outcome gap = build_gap_instance(te.g, te.action, 3, iso_mode::h);
  REQUIRE(gap.gap());
  CHECK(gap.low == ratio());
  CHECK(gap.high == ratio(1, 1));

  phi_result phi = build_phi(*gap.instance);
  CHECK(phi.l == 3);
  CHECK(phi.induced_transitive);

  // parts are the edges {0,3},{1,4},{2,5}; shifting by g rotates them by g mod 3
  for (std::size_t gi = 0; gi < gap.instance->group.order(); ++gi) {
    int shift = gap.instance->group.elements[gi][0] % 3;
    for (int j = 0; j < 3; ++j) CHECK(phi.sigma[gi][j] == (j + shift) % 3);
  }
}

TEST_CASE("homomorphism law on the full table") {
  for (auto cr : {two_triangles(), three_edges()}) {
    int n = cr.g.num_vertices == 6 && components(cr.g).size() == 3 ? 3 : 2;
    gap_instance inst = *build_gap_instance(cr.g, cr.action, n, iso_mode::h).instance;
    phi_result phi = build_phi(inst);
    for (std::size_t a = 0; a < inst.group.order(); ++a)
      for (std::size_t b = 0; b < inst.group.order(); ++b) {
        int ab = inst.group.element_index(
            inst.group.elements[a].compose(inst.group.elements[b]));
        CHECK(phi.sigma[a].compose(phi.sigma[b]) == phi.sigma[static_cast<std::size_t>(ab)]);
      }
  }
}

TEST_CASE("closeness certificates satisfy the refined bound") {
  for (iso_mode mode : {iso_mode::h, iso_mode::iota}) {
    auto tt = two_triangles();
    gap_outcome gap = build_gap_instance(tt.g, tt.action, 2, mode);
    REQUIRE(gap.gap());
    phi_result phi = build_phi(*gap.instance);
    ratio r = gap.instance->low / gap.instance->high;
    std::uint64_t s0 = static_cast<std::uint64_t>(phi.parts[0].count());
    for (std::size_t gi = 0; gi < gap.instance->group.order(); ++gi)
      for (int j = 0; j < phi.l; ++j) {
        int k = phi.sigma[gi][j];
        std::uint64_t sj = static_cast<std::uint64_t>(phi.parts[static_cast<std::size_t>(j)].count());
        std::uint64_t sk = static_cast<std::uint64_t>(phi.parts[static_cast<std::size_t>(k)].count());
        ratio fine = r * (ratio::from_int(2 * s0) + ratio::from_int(sj) + ratio::from_int(sk));
        CHECK(ratio::from_int(static_cast<std::uint64_t>(
                  phi.closeness[gi][static_cast<std::size_t>(j)])) <= fine);
      }
  }
}

TEST_CASE("phi in iota mode") {
  auto tt = two_triangles();
  gap_outcome gap = build_gap_instance(tt.g, tt.action, 2, iso_mode::iota);
  REQUIRE(gap.gap());
  CHECK(gap.low == ratio());
  phi_result phi = build_phi(*gap.instance);
  CHECK(phi.l == 2);
}

TEST_CASE("phi_json shape") {
  auto tt = two_triangles();
  gap_instance inst = *build_gap_instance(tt.g, tt.action, 2, iso_mode::h).instance;
  ordered_json j = phi_json(build_phi(inst));
  CHECK(j["l"] == 2);
  CHECK(j["sigma"].size() == 6);
  CHECK(j["closeness_max"]["num"] == 0);
  CHECK(j["induced_action_transitive"] == true);
}

TEST_CASE("almost invariance") {
  perm_group z4 = generate_group({rotation(4, 1)});
  vset c;
  c.set(1);
  c.set(2);
  // shifts give |C sym C+s| = 0,2,4,2, so eps* = 2; |W\C| = 2 <= (2/2)*4
  check_report rep = almost_invariance_check(z4, c);
  CHECK(rep.status == check_status::pass);
  CHECK(rep.note == "eps* = 2");

  check_report whole = almost_invariance_check(z4, vset::full(4));
  CHECK(whole.status == check_status::pass);
  CHECK(whole.note == "eps* = 0");

  // singleton in a transitive action of degree k >= 3: translates are equal or
  // disjoint, eps* = 2, and k-1 <= k holds
  for (int k : {3, 5, 8}) {
    perm_group zk = generate_group({rotation(k, 1)});
    check_report rep2 = almost_invariance_check(zk, vset::single(0));
    CHECK(rep2.status == check_status::pass);
    CHECK(rep2.note == "eps* = 2");
  }

  // contrapositive: |C| <= |W|/2 forces eps* >= 1
  for (int k : {4, 6, 9}) {
    perm_group zk = generate_group({rotation(k, 1)});
    for (int size = 1; size <= k / 2; ++size) {
      vset s;
      for (int v = 0; v < size; ++v) s.set(v);
      ratio eps_star;
      for (const auto& h : zk.elements) {
        ratio cand(static_cast<std::uint64_t>((s ^ apply_set(h, s)).count()),
                   static_cast<std::uint64_t>(s.count()));
        if (eps_star < cand) eps_star = cand;
      }
      CHECK(ratio(1, 1) <= eps_star);
    }
  }

  CHECK_THROWS_AS(almost_invariance_check(z4, vset{}), error);
  CHECK_THROWS_AS(almost_invariance_check(generate_group({perm::identity(3)}), vset::single(0)), error);

  // a supplied tolerance smaller than eps* is reported in the sub-check
  check_report given = almost_invariance_check(z4, c, ratio(1, 1));
  REQUIRE(given.parts.size() == 1);
  CHECK(!given.parts[0].pass);
}

TEST_CASE("assert_l_equals_n") {
  auto te = three_edges();
  gap_instance inst = *build_gap_instance(te.g, te.action, 3, iso_mode::h).instance;
  phi_result phi = build_phi(inst);
  check_report rep = assert_l_equals_n(phi, inst);
  CHECK(rep.status == check_status::pass);
  CHECK(!rep.repro.has_value());

  // a doctored phi with too small a degree must produce a repro bundle
  phi_result broken = phi;
  broken.l = 2;
  check_report bad = assert_l_equals_n(broken, inst);
  CHECK(bad.status == check_status::fail);
  REQUIRE(bad.repro.has_value());
  CHECK(bad.repro->graph_text == serialize_graph(inst.g));
}

TEST_CASE("weak imprimitivity bound") {
  auto c5 = family_cycle(5);
  check_report rep = weak_imprimitivity_bound(c5.g, c5.action, 2);
  CHECK(rep.status == check_status::pass);  // Z/5 has no index-2 subgroup
  REQUIRE(rep.parts.size() == 2);
  CHECK(rep.parts[0].pass);
  CHECK(rep.parts[1].pass);

  auto c6 = family_cycle(6);
  CHECK(weak_imprimitivity_bound(c6.g, c6.action, 2).status ==
        check_status::not_applicable);
  CHECK(weak_imprimitivity_bound(c6.g, c6.action, 3).status ==
        check_status::not_applicable);

  auto c7 = family_cycle(7);
  for (int n = 2; n <= 5; ++n)
    CHECK(weak_imprimitivity_bound(c7.g, c7.action, n).status == check_status::pass);
}
