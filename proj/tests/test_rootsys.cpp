#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "perioddomain/chevalley.hpp"
#include "perioddomain/rootsys.hpp"

using namespace perioddomain;

TEST_CASE("type parsing and validity ranges") {
  CHECK(parse_type("A1").series == Series::A);
  CHECK(parse_type("E8").rank == 8);
  CHECK_THROWS_AS(parse_type("C2"), invalid_type);
  CHECK_THROWS_AS(parse_type("D3"), invalid_type);
  CHECK_THROWS_AS(parse_type("E9"), invalid_type);
  CHECK_THROWS_AS(parse_type("A0"), invalid_type);
  CHECK_THROWS_AS(parse_type("H3"), invalid_type);
  CHECK_THROWS_AS(parse_type("G"), invalid_type);
}

TEST_CASE("A1 and A2 root sets") {
  RootSystem a1 = RootSystem::build(Series::A, 1);
  CHECK(a1.num_roots() == 2);
  CHECK(a1.inner(0, 0) == Rational(1, 2));

  RootSystem a2 = RootSystem::build(Series::A, 2);
  CHECK(a2.num_positive() == 3);
  std::set<RootCoords> pos;
  for (int i = 0; i < 3; ++i) pos.insert(a2.root(i));
  CHECK(pos == std::set<RootCoords>{{1, 0}, {0, 1}, {1, 1}});
  CHECK(a2.inner_coords({1, 0}, {0, 1}) == Rational(-1, 6));
  CHECK(a2.inner(0, 0) == Rational(1, 3));
}

TEST_CASE("inner product is symmetric") {
  for (auto name : {"A3", "B3", "G2"}) {
    RootSystem rs = RootSystem::build(parse_type(name));
    for (int i = 0; i < rs.num_roots(); ++i)
      for (int j = 0; j < rs.num_roots(); ++j) CHECK(rs.inner(i, j) == rs.inner(j, i));
  }
}

TEST_CASE("G2 has 12 roots in two lengths with ratio 3") {
  RootSystem g2 = RootSystem::build(Series::G, 2);
  CHECK(g2.num_roots() == 12);
  std::set<Rational> lengths;
  for (int i = 0; i < g2.num_roots(); ++i) lengths.insert(g2.inner(i, i));
  REQUIRE(lengths.size() == 2);
  CHECK(*lengths.rbegin() == Rational(3) * *lengths.begin());
}

TEST_CASE("root strings") {
  RootSystem a2 = RootSystem::build(Series::A, 2);
  int a1i = a2.index_of_checked({1, 0}), a2i = a2.index_of_checked({0, 1});
  CHECK(a2.root_string(a1i, a2i) == std::pair<int, int>{0, 1});

  RootSystem g2 = RootSystem::build(Series::G, 2);
  int lng = g2.index_of_checked({0, 1});  // long simple
  int sht = g2.index_of_checked({1, 0});  // short simple
  CHECK(g2.root_string(lng, sht) == std::pair<int, int>{0, 3});

  // orthogonal roots with no string
  RootSystem a3 = RootSystem::build(Series::A, 3);
  int x = a3.index_of_checked({1, 0, 0}), y = a3.index_of_checked({0, 0, 1});
  CHECK(a3.inner(x, y).is_zero());
  CHECK(a3.root_string(x, y) == std::pair<int, int>{0, 0});
  CHECK_THROWS_AS(a3.root_string(x, x), not_a_root);
}

TEST_CASE("invariant degrees and Weyl orders") {
  WeylData a1 = invariant_degrees(Series::A, 1);
  CHECK(a1.poly_degrees == std::vector<int>{2});
  CHECK(a1.order == 2);

  WeylData g2 = invariant_degrees(Series::G, 2);
  CHECK(g2.poly_degrees == std::vector<int>{2, 6});
  CHECK(g2.order == 12);
  CHECK(RootSystem::build(Series::G, 2).weyl_order_computed() == 12);

  // Tables asserted against the reflection-group computation, not trusted.
  for (auto name : {"A4", "B4", "C4", "D5", "F4", "E6", "E7"}) {
    RootSystem rs = RootSystem::build(parse_type(name));
    CHECK(rs.weyl_order_computed() == invariant_degrees(rs.series(), rs.rank()).order);
  }
  CHECK(RootSystem::build(Series::E, 8).weyl_order_computed() == 696729600);
}

TEST_CASE("reflections permute the root set and preserve the form") {
  for (auto name : {"A3", "B3", "C3", "D4", "G2"}) {
    RootSystem rs = RootSystem::build(parse_type(name));
    for (int b = 0; b < rs.num_roots(); ++b) {
      std::set<int> image;
      for (int a = 0; a < rs.num_roots(); ++a) image.insert(rs.reflect(a, b));
      CHECK(int(image.size()) == rs.num_roots());
    }
    for (int g = 0; g < rs.num_roots(); ++g)
      for (int a = 0; a < rs.num_roots(); ++a)
        for (int b = 0; b < rs.num_roots(); ++b)
          CHECK(rs.inner(rs.reflect(a, g), rs.reflect(b, g)) == rs.inner(a, b));
  }
}

TEST_CASE("positive roots form an order ideal over the simple roots") {
  for (auto name : {"A4", "B4", "C4", "D4", "F4", "G2"}) {
    RootSystem rs = RootSystem::build(parse_type(name));
    for (int i = 0; i < rs.num_positive(); ++i) {
      if (rs.height(i) == 1) continue;
      bool has_step = false;
      for (int t = 0; t < rs.rank() && !has_step; ++t) {
        RootCoords down = rs.root(i);
        down[t] -= 1;
        int j = rs.index_of(down);
        if (j >= 0 && rs.is_positive(j)) has_step = true;
      }
      CHECK(has_step);
    }
    WeylData wd = invariant_degrees(rs.series(), rs.rank());
    CHECK(int(wd.poly_degrees.size()) == rs.rank());
  }
}

TEST_CASE("crystallographic integrality, zero sum, positive count") {
  for (auto name : {"A5", "B4", "C4", "D4", "F4", "G2"}) {
    RootSystem rs = RootSystem::build(parse_type(name));
    for (int i = 0; i < rs.num_roots(); ++i)
      for (int j = 0; j < rs.num_roots(); ++j) (void)rs.cartan_pairing(i, j);  // throws if not
    RootCoords sum(rs.rank(), 0);
    for (int i = 0; i < rs.num_roots(); ++i)
      for (int t = 0; t < rs.rank(); ++t) sum[t] += rs.root(i)[t];
    CHECK(sum == RootCoords(rs.rank(), 0));
    int want = 0;
    for (int d : invariant_degrees(rs.series(), rs.rank()).poly_degrees) want += d - 1;
    CHECK(rs.num_positive() == want);
  }
}

// Independent oracle for the Killing-dual normalization: compute the Killing
// form on the coroots from Cartan integers alone (kappa(a_i^vee, a_j^vee) =
// sum_gamma <gamma,a_i^vee><gamma,a_j^vee>), then invert; no Gram data used.
TEST_CASE("gram matches the Killing form computed from structure constants") {
  for (auto name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "F4"}) {
    RootSystem rs = RootSystem::build(parse_type(name));
    int r = rs.rank();
    std::vector<std::vector<std::int64_t>> kv(r, std::vector<std::int64_t>(r, 0));
    for (int g = 0; g < rs.num_roots(); ++g) {
      std::vector<int> simple_idx(r);
      for (int i = 0; i < r; ++i) {
        RootCoords e(r, 0);
        e[i] = 1;
        simple_idx[i] = rs.index_of_checked(e);
      }
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          kv[i][j] += rs.cartan_pairing(g, simple_idx[i]) * rs.cartan_pairing(g, simple_idx[j]);
    }
    // <a_i,a_i> = 4/kappa(a_i^vee,a_i^vee); <a_i,a_j> = kappa_ij <ii><jj>/4.
    for (int i = 0; i < r; ++i) {
      Rational dii(4, kv[i][i]);
      CHECK(rs.gram()[i][i] == dii);
      for (int j = 0; j < r; ++j) {
        Rational djj(4, kv[j][j]);
        CHECK(rs.gram()[i][j] == Rational(kv[i][j]) * dii * djj / Rational(4));
      }
    }
  }
}

TEST_CASE("bourbaki normalization gives long roots squared length 2") {
  for (auto name : {"A2", "B3", "C3", "G2", "F4"}) {
    Normalization n;
    n.kind = Normalization::bourbaki;
    RootSystem rs = RootSystem::build(parse_type(name), n);
    Rational longest;
    for (int i = 0; i < rs.num_roots(); ++i)
      if (longest < rs.inner(i, i)) longest = rs.inner(i, i);
    CHECK(longest == Rational(2));
  }
}
