#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>

#include "doctest.h"
#include "perioddomain/catalog.hpp"
#include "perioddomain/cohomology.hpp"

using namespace perioddomain;

TEST_CASE("hirsch: equal degree lists give the constant 1") {
  CHECK(hirsch_polynomial({4, 6}, {4, 6}) == Poly{1});
}

TEST_CASE("hirsch: projective spaces against the Schubert-cell count") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> s, r;
    for (int i = 2; i <= n + 1; ++i) s.push_back(2 * i);
    for (int i = 1; i <= n; ++i) r.push_back(2 * i);
    Poly want(2 * n + 1, 0);
    for (int i = 0; i <= n; ++i) want[2 * i] = 1;  // one cell per dimension
    CHECK(hirsch_polynomial(s, r) == want);
  }
}

// Independent oracle: enumerate W(A2) and count elements by length.
TEST_CASE("hirsch: full flag threefold against the Weyl-length generating function") {
  RootSystem rs = RootSystem::build(Series::A, 2);
  // Elements as permutations of the root indices; length = number of positive
  // roots sent to negative ones.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  std::vector<int> id(rs.num_roots());
  for (int i = 0; i < rs.num_roots(); ++i) id[i] = i;
  seen.insert(id);
  frontier.push_back(id);
  std::map<int, int> by_length{{0, 1}};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto& w : frontier)
      for (int s = 0; s < rs.rank(); ++s) {
        RootCoords simple(rs.rank(), 0);
        simple[s] = 1;
        int si = rs.index_of_checked(simple);
        std::vector<int> ws(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) ws[i] = rs.reflect(w[i], si);
        if (seen.insert(ws).second) {
          int len = 0;
          for (int i = 0; i < rs.num_positive(); ++i)
            if (!rs.is_positive(ws[i])) ++len;
          ++by_length[len];
          next.push_back(std::move(ws));
        }
      }
    frontier = std::move(next);
  }
  Poly oracle(2 * by_length.rbegin()->first + 1, 0);
  std::int64_t total = 0;
  for (auto& [len, count] : by_length) {
    oracle[2 * len] = count;
    total += count;
  }
  CHECK(total == 6);
  CHECK(hirsch_polynomial({4, 6}, {2, 2}) == oracle);
  CHECK(oracle == Poly{1, 0, 2, 0, 2, 0, 1});
}

TEST_CASE("hirsch rejects non-polynomial quotients") {
  CHECK_THROWS_AS(hirsch_polynomial({4, 6}, {2}), non_polynomial_quotient);
  CHECK_THROWS_AS(hirsch_polynomial({4}, {6}), non_polynomial_quotient);
}

TEST_CASE("euler characteristics") {
  SymmetricPair cp2;
  cp2.name = "CP^2";
  cp2.u = {Series::A, 2};
  cp2.k_factors = {{Series::A, 1}};
  cp2.k_torus = 1;
  cp2.hermitian = true;
  CHECK(euler_characteristic(cp2) == 3);

  SymmetricPair same;
  same.u = {Series::B, 3};
  same.k_factors = {{Series::B, 3}};
  CHECK(euler_characteristic(same) == 1);

  SymmetricPair flag;  // SU(3)/T
  flag.u = {Series::A, 2};
  flag.k_torus = 2;
  CHECK(euler_characteristic(flag) == 6);
}

TEST_CASE("low betti per the classification branches") {
  const Catalog& cat = Catalog::builtin();
  // Sp(p) x Sp(q) in Sp(p+q): (0, 1).
  CHECK(low_betti(to_symmetric_pair(cat.find("Sp(3,1)"))) == std::pair<int, int>{0, 1});
  CHECK(low_betti(to_symmetric_pair(cat.find("Sp(2,1)"))) == std::pair<int, int>{0, 1});
  // Hermitian pair with two semisimple K-factors: (1, 2).
  CHECK(low_betti(to_symmetric_pair(cat.find("SU(2,2)"))) == std::pair<int, int>{1, 2});
  CHECK(low_betti(to_symmetric_pair(cat.find("SU(3,2)"))) == std::pair<int, int>{1, 2});
  // Hermitian with a single semisimple K-factor: the honest h^4 is 1, one of
  // the places the printed branch table overstates.
  CHECK(low_betti(to_symmetric_pair(cat.find("SO*(8)"))) == std::pair<int, int>{1, 1});
  CHECK(low_betti(to_symmetric_pair(cat.find("SU(4,1)"))) == std::pair<int, int>{1, 1});
  // K simple: h4 = 0.
  CHECK(low_betti(to_symmetric_pair(cat.find("SL(5,R)"))).second == 0);
  CHECK(low_betti(to_symmetric_pair(cat.find("SU*(6)"))).second == 0);
  CHECK(low_betti(to_symmetric_pair(cat.find("E6(-26)"))).second == 0);
  // dim U <= 3 is rejected.
  CHECK_THROWS_AS(low_betti(to_symmetric_pair(cat.find("SL(2,R)"))), not_irreducible);
}

TEST_CASE("hirsch h2/h4 equals the invariant-theory count on equal-rank pairs") {
  for (auto& rec : Catalog::builtin().forms()) {
    if (!rec.equal_rank() || rec.complex_type.rank > 6) continue;
    SymmetricPair p = to_symmetric_pair(rec);
    if (p.dim_u() <= 3) continue;
    Poly P = poincare_polynomial(p);
    int h2 = P.size() > 2 ? int(P[2]) : 0;
    int h4 = P.size() > 4 ? int(P[4]) : 0;
    int z = p.k_torus;
    CHECK(h2 == z);
    CHECK(h4 == int(p.k_factors.size()) + z * (z + 1) / 2 - 1);
  }
}

TEST_CASE("subsystem classification identifies canonical types") {
  RootSystem e7 = RootSystem::build(Series::E, 7);
  HodgeDatum hd = from_marking(e7, {0, 1, 0, 0, 0, 0, 0});
  std::vector<int> even;
  for (int i = 0; i < e7.num_roots(); ++i)
    if (hd.degree[i] % 2 == 0) even.push_back(i);
  CHECK(classify_subsystem(e7, even).str() == "A7");

  RootSystem d4 = RootSystem::build(Series::D, 4);
  HodgeDatum h2 = from_marking(d4, {0, 1, 0, 0});
  std::vector<int> ev;
  for (int i = 0; i < d4.num_roots(); ++i)
    if (h2.degree[i] % 2 == 0) ev.push_back(i);
  CHECK(classify_subsystem(d4, ev).str() == "A1+A1+A1+A1");
}

TEST_CASE("pontryagin nonvanishing: honest values either way") {
  const Catalog& cat = Catalog::builtin();
  // Hermitian: the central torus contributes an independent quadratic.
  CHECK(pontryagin_nonvanishing(to_symmetric_pair(cat.find("SU(2,2)"))).nonvanishing);
  CHECK(pontryagin_nonvanishing(to_symmetric_pair(cat.find("SO(2,5)"))).nonvanishing);
  // Unequal factor ranks: independent.
  CHECK(pontryagin_nonvanishing(to_symmetric_pair(cat.find("Sp(2,1)"))).nonvanishing);
  CHECK(pontryagin_nonvanishing(to_symmetric_pair(cat.find("SO(4,5)"))).nonvanishing);
  CHECK(pontryagin_nonvanishing(to_symmetric_pair(cat.find("G2(2)"))).nonvanishing);
  // Equal factors or simple K: the quadratic is forced proportional and the
  // class is zero; cross-checked against H^4 via Hirsch where it vanishes.
  PontryaginResult sphere = pontryagin_nonvanishing(to_symmetric_pair(cat.find("SO(6,1)")));
  CHECK(!sphere.nonvanishing);
  CHECK(low_betti(to_symmetric_pair(cat.find("SO(6,1)"))).second == 0);
  PontryaginResult spp = pontryagin_nonvanishing(to_symmetric_pair(cat.find("Sp(2,2)")));
  CHECK(!spp.nonvanishing);
  PontryaginResult f4 = pontryagin_nonvanishing(to_symmetric_pair(cat.find("F4(-20)")));
  CHECK(!f4.nonvanishing);
  CHECK(low_betti(to_symmetric_pair(cat.find("F4(-20)"))).second == 0);

  // Non-equal-rank pairs are rejected.
  CHECK_THROWS_AS(pontryagin_nonvanishing(to_symmetric_pair(cat.find("SL(5,R)"))),
                  non_equal_rank);
}

TEST_CASE("poincare polynomials are palindromic with the right top degree") {
  for (auto& rec : Catalog::builtin().forms()) {
    if (!rec.equal_rank() || rec.complex_type.rank > 5) continue;
    SymmetricPair p = to_symmetric_pair(rec);
    Poly P = poincare_polynomial(p);
    for (std::size_t i = 0; i < P.size(); ++i) CHECK(P[i] == P[P.size() - 1 - i]);
    std::int64_t at1 = 0;
    for (auto c : P) at1 += c;
    CHECK(at1 == euler_characteristic(p));
  }
}
