#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "perioddomain/cohomology.hpp"
#include "perioddomain/hodge.hpp"

using namespace perioddomain;

namespace {
std::set<RootCoords> horizontal_coords(const HodgeDatum& hd) {
  std::set<RootCoords> out;
  for (int i : hd.horizontal) out.insert(hd.rs->root(i));
  return out;
}
}  // namespace

TEST_CASE("A1 with marking 1") {
  RootSystem rs = RootSystem::build(Series::A, 1);
  HodgeDatum hd = from_marking(rs, {1});
  CHECK(horizontal_coords(hd) == std::set<RootCoords>{{1}});
  CHECK(hd.phi.empty());
  CHECK(is_hermitian_grading(hd));
  auto blk = blocks(hd);
  REQUIRE(blk.size() == 1);
  CHECK(blk[0].roots.size() == 1);
}

TEST_CASE("A3 (0,1,0): the su(2,2) Hermitian grading") {
  RootSystem rs = RootSystem::build(Series::A, 3);
  HodgeDatum hd = from_marking(rs, {0, 1, 0});
  CHECK(horizontal_coords(hd) ==
        std::set<RootCoords>{{0, 1, 0}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}});
  CHECK(hd.phi == std::vector<int>{0, 2});
  CHECK(is_hermitian_grading(hd));
  auto blk = blocks(hd);
  REQUIRE(blk.size() == 1);
  CHECK(blk[0].anchor == 1);
  CHECK(blk[0].roots.size() == 4);
}

TEST_CASE("A3 (1,0,1): two blocks") {
  RootSystem rs = RootSystem::build(Series::A, 3);
  HodgeDatum hd = from_marking(rs, {1, 0, 1});
  auto blk = blocks(hd);
  REQUIRE(blk.size() == 2);
  CHECK(blk[0].anchor == 0);
  CHECK(blk[1].anchor == 2);
  CHECK(blk[0].roots.size() + blk[1].roots.size() == hd.horizontal.size());
}

TEST_CASE("rank-2 non-Hermitian grading has a degree-2 root") {
  // The B2 = C2 system marked at the long simple root: horizontal
  // {a1, a1+a2}, with 2a2+a1-type roots reaching degree 2.
  RootSystem rs = RootSystem::build(Series::B, 2);
  HodgeDatum hd = from_marking(rs, {0, 1});
  CHECK(hd.horizontal.size() == 2);
  CHECK(!is_hermitian_grading(hd));
  bool has2 = false;
  for (int i = 0; i < rs.num_roots(); ++i)
    if (hd.degree[i] == 2) has2 = true;
  CHECK(has2);
}

TEST_CASE("trivial marking is allowed and flagged") {
  RootSystem rs = RootSystem::build(Series::A, 2);
  HodgeDatum hd = from_marking(rs, {0, 0});
  CHECK(hd.trivial);
  CHECK(hd.horizontal.empty());
  CHECK(is_hermitian_grading(hd));
  CHECK(blocks(hd).empty());
  // q = g_C: all roots in the Levi.
  CHECK(parabolic_data(hd).levi_roots.size() == std::size_t(rs.num_roots()));
}

TEST_CASE("negative markings are rejected") {
  RootSystem rs = RootSystem::build(Series::A, 2);
  CHECK_THROWS_AS(from_marking(rs, {1, -1}), negative_marking);
  CHECK_THROWS_AS(from_marking(rs, {1}), std::invalid_argument);
}

TEST_CASE("parabolic data: Borel for all-positive markings, Levi symmetry") {
  RootSystem rs = RootSystem::build(Series::A, 3);
  HodgeDatum borel = from_marking(rs, {1, 1, 1});
  CHECK(parabolic_data(borel).levi_roots.empty());
  CHECK(parabolic_data(borel).nilradical_roots.size() == std::size_t(rs.num_positive()));

  HodgeDatum hd = from_marking(rs, {0, 1, 0});
  ParabolicData pd = parabolic_data(hd);
  // Levi root set is the A1 x A1 subsystem, closed under negation.
  CHECK(pd.levi_roots.size() == 4);
  SubsystemType lt = classify_subsystem(rs, pd.levi_roots);
  CHECK(lt.str() == "A1+A1+T1");
  std::set<int> levi(pd.levi_roots.begin(), pd.levi_roots.end());
  for (int i : pd.levi_roots) CHECK(levi.count(rs.negative(i)));
  // Levi, nilradical and the positive-degree part partition the roots.
  CHECK(int(pd.levi_roots.size() + 2 * pd.nilradical_roots.size()) == rs.num_roots());
}

TEST_CASE("weighted markings grade additively with matching signs") {
  RootSystem rs = RootSystem::build(Series::B, 3);
  HodgeDatum hd = from_marking(rs, {2, 0, 1});
  for (int i = 0; i < rs.num_roots(); ++i) {
    CHECK(hd.degree[rs.negative(i)] == -hd.degree[i]);
    CHECK(hd.eps[i] == (hd.degree[i] % 2 != 0 ? 1 : -1));
    for (int j = 0; j < rs.num_roots(); ++j) {
      int s = rs.sum(i, j);
      if (s >= 0) {
        CHECK(hd.degree[s] == hd.degree[i] + hd.degree[j]);
        CHECK(hd.eps[s] == -hd.eps[i] * hd.eps[j]);
      }
    }
  }
}

TEST_CASE("compact part = even degrees matches the declared maximal compacts") {
  // su(2,2): marking (0,1,0) has even part A1+A1+T1.
  RootSystem rs = RootSystem::build(Series::A, 3);
  HodgeDatum hd = from_marking(rs, {0, 1, 0});
  std::vector<int> even;
  for (int i = 0; i < rs.num_roots(); ++i)
    if (hd.degree[i] % 2 == 0) even.push_back(i);
  CHECK(classify_subsystem(rs, even).str() == "A1+A1+T1");

  // sp(3,R): C3 marked at the long root has even part A2+T1.
  RootSystem c3 = RootSystem::build(Series::C, 3);
  HodgeDatum hc = from_marking(c3, {0, 0, 1});
  std::vector<int> ev;
  for (int i = 0; i < c3.num_roots(); ++i)
    if (hc.degree[i] % 2 == 0) ev.push_back(i);
  CHECK(classify_subsystem(c3, ev).str() == "A2+T1");
}
