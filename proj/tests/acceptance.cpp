// Acceptance suite: runs every criterion of the verification battery at full
// scope (all simple types to rank 8, >= 1000 commuting pairs per Hodge datum)
// and prints one PASS/FAIL line per criterion.
//
// Criteria 7, 9 and 10 currently FAIL, and the failures are genuine
// mathematical findings, not implementation faults:
//   7.  Totally ordered blocks of quadric type (B/C/D gradings marked at an
//       end node) contain orthogonal root pairs; the curvature form vanishes
//       there on nonproportional commuting pairs. The strict-positivity
//       conclusion holds exactly for the blocks classified StrictlyPositive.
//   9.  The h^4 branch table (0 simple / 2 Hermitian / 1 otherwise) is off
//       whenever K has one factor with a torus (h^4 = 1: complex hyperbolic
//       and odd-quadric duals) or three or more factors (h^4 >= 2, e.g.
//       SO(4,q) duals). The Hirsch values themselves agree exactly with the
//       invariant-theory dimension count on every equal-rank pair.
//   10. p1(F) is proportional to the ambient invariant whenever K is simple
//       (even spheres, F4(-20), E7(7), E8(8)) or has equal proportionality
//       constants (Sp(p,p), SO(2a,2a), SO(4,1)); its class in H^4(U/K) then
//       vanishes, independently confirmed by h^4 = 0 where applicable.
// The failing items print the full witness data.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>

#include "doctest.h"
#include "perioddomain/verify.hpp"

using namespace perioddomain;

namespace {
const std::vector<CriterionResult>& battery() {
  static std::vector<CriterionResult> results = [] {
    VerifyOptions opt;
    opt.max_rank = 8;
    opt.pairs_per_datum = 1000;
    opt.seed = 2026;
    opt.threads = 2;
    auto r = run_acceptance(opt);
    for (auto& c : r) {
      std::printf("CRITERION %2d: %s  (%lld items) %s\n", c.id,
                  c.passed ? "PASS" : "FAIL", (long long)c.items_checked, c.name.c_str());
      for (auto& f : c.failures) std::printf("    %s\n", f.c_str());
    }
    std::fflush(stdout);
    return r;
  }();
  return results;
}

void require_criterion(int id) {
  for (auto& c : battery()) {
    if (c.id != id) continue;
    INFO(c.name);
    CHECK(c.items_checked > 0);
    for (auto& f : c.failures) {
      CAPTURE(f);
      CHECK_MESSAGE(false, f);
    }
    CHECK(c.passed);
    return;
  }
  FAIL("criterion missing from the battery");
}
}  // namespace

TEST_CASE("criterion 1: Jacobi and Weyl-basis laws, all types to rank 8") { require_criterion(1); }
TEST_CASE("criterion 2: conjugation axioms on every catalog datum") { require_criterion(2); }
TEST_CASE("criterion 3: cocycle identity, rank <= 6") { require_criterion(3); }
TEST_CASE("criterion 4: root-string identity, exactly") { require_criterion(4); }
TEST_CASE("criterion 5: oracle equivalence on >= 1000 pairs per datum") { require_criterion(5); }
TEST_CASE("criterion 6: nonnegativity of coefficients and values") { require_criterion(6); }
TEST_CASE("criterion 7: block positivity (expected red: quadric-type blocks)") {
  require_criterion(7);
}
TEST_CASE("criterion 8: Hirsch formula") { require_criterion(8); }
TEST_CASE("criterion 9: Betti branch table (expected red: overstated branches)") {
  require_criterion(9);
}
TEST_CASE("criterion 10: p1 nonvanishing (expected red: proportional cases)") {
  require_criterion(10);
}
TEST_CASE("criterion 11: classification gates") { require_criterion(11); }
TEST_CASE("criterion 12: determinism") { require_criterion(12); }

TEST_CASE("catalog validation is part of acceptance") {
  auto problems = Catalog::builtin().validate(8);
  for (auto& p : problems) {
    CAPTURE(p);
    CHECK_MESSAGE(false, p);
  }
}
