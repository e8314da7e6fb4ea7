#pragma once

#include "perioddomain/catalog.hpp"
#include "perioddomain/rational.hpp"

namespace perioddomain {

enum class LatticeVerdict {
  NotKahlerLattice,
  KahlerViaHermitian,
  BelowThreshold,
  NotHodgeType,
};
std::string to_string(LatticeVerdict v);

// Hodge type = the maximal compact subgroup has full rank.
bool is_hodge_type(const RealFormRecord& rec);

// Hermitian type, by the classification list, cross-validated against the
// grading oracle at catalog load time.
bool is_hermitian(const RealFormRecord& rec);

// Rank-threshold logic: Hermitian groups carry cocompact Kahler lattices at
// any rank; Hodge-non-Hermitian groups of real rank >= 20 carry none; below
// the threshold nothing is decided; non-Hodge groups are excluded outright.
LatticeVerdict lattice_verdict(const RealFormRecord& rec);

// Lower bound rk_R(G)/4 - 1 for the Matsushima range m(G).
Rational matsushima_bound(const RealFormRecord& rec);
Rational matsushima_bound(int real_rank);

}  // namespace perioddomain
