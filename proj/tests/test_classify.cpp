#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "perioddomain/classify.hpp"
#include "perioddomain/hodge.hpp"

using namespace perioddomain;

TEST_CASE("catalog loads and validates cleanly") {
  const Catalog& cat = Catalog::builtin();
  CHECK(cat.version() >= 1);
  CHECK(cat.forms().size() > 100);
  auto problems = cat.validate(8);
  for (auto& p : problems) MESSAGE(p);
  CHECK(problems.empty());
  CHECK_THROWS_AS(cat.find("NoSuchGroup"), unknown_form);
}

TEST_CASE("hodge type = equal rank, computed not stored") {
  const Catalog& cat = Catalog::builtin();
  CHECK(is_hodge_type(cat.find("Sp(3,1)")));
  CHECK(is_hodge_type(cat.find("SU(3,2)")));
  CHECK(is_hodge_type(cat.find("SO(4,5)")));
  CHECK(!is_hodge_type(cat.find("SL(3,R)")));
  CHECK(!is_hodge_type(cat.find("SU*(6)")));
  CHECK(!is_hodge_type(cat.find("E6(6)")));
  CHECK(!is_hodge_type(cat.find("SO(3,5)")));
}

TEST_CASE("hermitian classification with the grading oracle") {
  const Catalog& cat = Catalog::builtin();
  CHECK(is_hermitian(cat.find("SU(2,2)")));
  CHECK(!is_hermitian(cat.find("Sp(3,1)")));
  CHECK(is_hermitian(cat.find("SO(2,7)")));   // the p = 1 exception
  CHECK(!is_hermitian(cat.find("SO(4,5)")));
  CHECK(is_hermitian(cat.find("Sp(4,R)")));
  CHECK(is_hermitian(cat.find("SO*(10)")));
  CHECK(is_hermitian(cat.find("E6(-14)")));
  CHECK(is_hermitian(cat.find("E7(-25)")));
  CHECK(!is_hermitian(cat.find("E8(8)")));

  for (auto& rec : cat.forms()) {
    if (is_hermitian(rec)) CHECK(is_hodge_type(rec));  // hermitian => hodge
    if (!rec.marking.empty() && rec.complex_type.rank <= 6) {
      RootSystem rs = RootSystem::build(rec.complex_type);
      CHECK(is_hermitian_grading(from_marking(rs, rec.marking)) == is_hermitian(rec));
    }
  }
}

TEST_CASE("lattice verdicts") {
  const Catalog& cat = Catalog::builtin();
  CHECK(lattice_verdict(cat.find("Sp(25,25)")) == LatticeVerdict::NotKahlerLattice);
  CHECK(lattice_verdict(cat.find("Sp(20,20)")) == LatticeVerdict::NotKahlerLattice);
  CHECK(lattice_verdict(cat.find("SO(20,21)")) == LatticeVerdict::NotKahlerLattice);
  CHECK(lattice_verdict(cat.find("Sp(3,1)")) == LatticeVerdict::BelowThreshold);
  CHECK(lattice_verdict(cat.find("G2(2)")) == LatticeVerdict::BelowThreshold);
  CHECK(lattice_verdict(cat.find("SU(3,2)")) == LatticeVerdict::KahlerViaHermitian);
  CHECK(lattice_verdict(cat.find("SU(20,20)")) == LatticeVerdict::KahlerViaHermitian);
  CHECK(lattice_verdict(cat.find("Sp(20,R)")) == LatticeVerdict::KahlerViaHermitian);
  CHECK(lattice_verdict(cat.find("SL(21,R)")) == LatticeVerdict::NotHodgeType);
  CHECK(lattice_verdict(cat.find("SO(21,21)")) == LatticeVerdict::NotHodgeType);

  // The excluded set at rank >= 20 is exactly the expected families.
  for (auto& rec : cat.forms()) {
    bool excluded = lattice_verdict(rec) == LatticeVerdict::NotKahlerLattice;
    bool expected = rec.real_rank >= 20 && is_hodge_type(rec) && !is_hermitian(rec);
    CHECK(excluded == expected);
    if (excluded)
      CHECK((rec.family == "Sp(p,q)" || rec.family == "SO(p,q)" ||
             rec.family == "exceptional"));
  }
}

TEST_CASE("matsushima bound") {
  CHECK(matsushima_bound(20) == Rational(4));
  CHECK(matsushima_bound(12) == Rational(2));
  CHECK(matsushima_bound(4) == Rational(0));
  CHECK(matsushima_bound(25) == Rational(21, 4));
  CHECK(matsushima_bound(Catalog::builtin().find("Sp(3,1)")) == Rational(-3, 4));
}

TEST_CASE("exactly eight exceptional Hodge-non-Hermitian forms") {
  // The remark after the rank theorem speaks of eight excluded exceptional
  // groups without listing them; the catalog pins the count down.
  int count = 0;
  std::vector<std::string> names;
  for (auto& rec : Catalog::builtin().forms())
    if (rec.family == "exceptional" && is_hodge_type(rec) && !is_hermitian(rec)) {
      ++count;
      names.push_back(rec.name);
    }
  for (auto& n : names) MESSAGE(n);
  CHECK(count == 8);
}

TEST_CASE("symmetric-pair view is consistent with the record") {
  const RealFormRecord& rec = Catalog::builtin().find("Sp(3,1)");
  SymmetricPair p = to_symmetric_pair(rec);
  CHECK(p.u.str() == "C4");
  CHECK(p.equal_rank());
  CHECK(!p.k_simple());
  CHECK(p.k_factors.size() == 2);
}
