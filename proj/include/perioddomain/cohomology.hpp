#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "perioddomain/hodge.hpp"
#include "perioddomain/rootsys.hpp"

namespace perioddomain {

struct non_polynomial_quotient : std::runtime_error {
  non_polynomial_quotient() : std::runtime_error("Hirsch quotient is not a polynomial") {}
};
struct non_equal_rank : std::runtime_error {
  non_equal_rank() : std::runtime_error("operation requires an equal-rank pair") {}
};
struct not_irreducible : std::runtime_error {
  explicit not_irreducible(const std::string& w) : std::runtime_error(w) {}
};

// Dense coefficient list, index = degree.
using Poly = std::vector<std::int64_t>;

// P(U/V, t) = prod (1-t^{s_i}) / prod (1-t^{r_j}); throws when the quotient
// is not a polynomial (non-equal-rank or malformed input).
Poly hirsch_polynomial(const std::vector<int>& s, const std::vector<int>& r);

// Decomposition type of a root subsystem: simple factors plus a torus.
struct SubsystemType {
  std::vector<TypeName> factors;  // canonicalized (D3 -> A3, C2 -> B2, ...)
  int torus = 0;
  std::string str() const;
};

// Classifies the subsystem spanned by the given closed set of root indices.
SubsystemType classify_subsystem(const RootSystem& rs, const std::vector<int>& roots);

// Compact symmetric pair U/K, named by its noncompact dual real form.
struct SymmetricPair {
  std::string name;
  TypeName u;
  std::vector<TypeName> k_factors;
  int k_torus = 0;
  bool hermitian = false;
  std::vector<int> marking;  // reference marking when rk K = rk U, else empty

  bool equal_rank() const;
  bool k_simple() const { return k_torus == 0 && k_factors.size() == 1; }
  int dim_u() const;
};

// Cohomological degree lists (the s_i and r_j of the Hirsch formula).
std::vector<int> u_degrees(const SymmetricPair& p);
std::vector<int> k_degrees(const SymmetricPair& p);

Poly poincare_polynomial(const SymmetricPair& p);  // equal rank only

// (h^2, h^4): Hirsch expansion when equal rank, classification branches
// otherwise. Requires an irreducible pair with dim U > 3.
std::pair<int, int> low_betti(const SymmetricPair& p);
// The branch values alone (h^2 = [hermitian]; h^4 = 0 if K simple,
// 2 if hermitian, 1 otherwise), for cross-checking against Hirsch.
std::pair<int, int> low_betti_branch(const SymmetricPair& p);

// chi(U/K) = |W_U| / |W_K| for equal-rank pairs; equals P(U/K, 1).
std::int64_t euler_characteristic(const SymmetricPair& p);

struct PontryaginResult {
  bool nonvanishing = false;
  // q_K and q_U as symmetric matrices over the simple-root coordinates,
  // flattened row-major; attached to failure reports.
  std::vector<Rational> q_k;
  std::vector<Rational> q_u;
  std::string detail;
};

// Tests whether the class of q_k = sum_{gamma in Delta_K} gamma^2 is nonzero
// in the degree-4 part of S(t*)^{W_K} / <S(t*)^{W_U,+}>, i.e. whether q_k is
// proportional to q_U. Requires an equal-rank pair with a reference marking.
PontryaginResult pontryagin_nonvanishing(const SymmetricPair& p);

}  // namespace perioddomain
