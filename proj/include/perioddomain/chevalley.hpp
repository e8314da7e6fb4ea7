#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "perioddomain/rootsys.hpp"
#include "perioddomain/scalar.hpp"

namespace perioddomain {

struct basis_mismatch : std::runtime_error {
  basis_mismatch() : std::runtime_error("elements live over different bases") {}
};

// Integral structure constants N_{alpha,beta} with |N| = p+1 and signs fixed
// by the extraspecial-pair convention (positive roots ordered by height then
// lexicographically; the extraspecial pair for each composite root gets a
// positive constant). Every other constant follows from antisymmetry,
// N_{-a,-b} = -N_{a,b}, the zero-sum-triple transport and the weighted
// cocycle relation, so the table is deterministic.
class ChevalleyConstants {
 public:
  explicit ChevalleyConstants(const RootSystem& rs);

  // N_{root_i, root_j}; zero when root_i + root_j is not a root (the
  // opposite-pair case [e_a, e_{-a}] = h_a is handled by the bracket, not
  // stored here).
  std::int64_t n(int i, int j) const {
    Rational v = table_[std::size_t(i) * size_ + j];
    return v.num();  // integral by construction; den == 1 asserted at build
  }
  const RootSystem& roots() const { return *rs_; }

 private:
  const RootSystem* rs_;
  std::size_t size_;
  std::vector<Rational> table_;
};

// Exactly verifies the Jacobi identity on all basis triples. Returns the
// number of violations (0 expected); `first` receives a printable witness.
std::int64_t jacobi_violations(const ChevalleyConstants& ch, std::string* first = nullptr);

// The kappa-normalized Weyl basis: kappa(e_a, e_{-a}) = 1, obtained from the
// Chevalley basis by the diagonal rescaling c_a = sqrt(<a,a>/2). Constants
// become rational multiples of square roots of rationals.
class WeylBasis {
 public:
  static WeylBasis build(RootSystem rs);

  const RootSystem& roots() const { return rs_; }
  const ChevalleyConstants& chevalley() const { return *chev_; }

  // half squared length <a,a>/2 of root i
  Rational w(int i) const { return rs_.inner(i, i) / Rational(2); }

  const Scalar& n(int i, int j) const { return nweyl_[std::size_t(i) * rs_.num_roots() + j]; }
  // N^2 as an exact rational (zero when the pair does not sum to a root).
  Rational n_squared(int i, int j) const {
    return n2_[std::size_t(i) * rs_.num_roots() + j];
  }

 private:
  RootSystem rs_;
  std::shared_ptr<ChevalleyConstants> chev_;
  std::vector<Scalar> nweyl_;
  std::vector<Rational> n2_;
};

// Element of g_C over a Weyl basis: a Cartan part (coordinates over the
// h_{alpha_i}) plus a finitely supported root part.
class LieElement {
 public:
  explicit LieElement(const WeylBasis& wb)
      : wb_(&wb), cartan_(wb.roots().rank()) {}

  static LieElement root_vector(const WeylBasis& wb, int idx, Scalar coeff = Scalar(1));
  static LieElement coroot(const WeylBasis& wb, int idx, Scalar coeff = Scalar(1));

  const WeylBasis& basis() const { return *wb_; }
  bool is_zero() const;
  const std::vector<Scalar>& cartan() const { return cartan_; }
  const std::map<int, Scalar>& root_part() const { return roots_; }

  Scalar root_coeff(int idx) const {
    auto it = roots_.find(idx);
    return it == roots_.end() ? Scalar() : it->second;
  }
  void add_root(int idx, const Scalar& c);
  void add_cartan(int simple, const Scalar& c) { cartan_[simple] += c; }

  LieElement operator+(const LieElement& o) const;
  LieElement operator-(const LieElement& o) const;
  LieElement scaled(const Scalar& s) const;

  friend bool operator==(const LieElement& a, const LieElement& b);

  // True when every root-space component has degree 0 under `deg` and there
  // are no stray parts; used for the curvature degree assertions.
  bool supported_on_degree(const std::vector<int>& deg_by_root, int degree) const;

 private:
  const WeylBasis* wb_;
  std::vector<Scalar> cartan_;
  std::map<int, Scalar> roots_;
};

LieElement bracket(const LieElement& x, const LieElement& y);
Scalar killing(const LieElement& x, const LieElement& y);

// Conjugation with respect to the compact form: tau(e_a) = -e_{-a},
// tau = -1 on the real Cartan, conjugate-linear on coefficients.
LieElement tau(const LieElement& x);

// Conjugation with respect to the real form of a Hodge datum:
// sigma(e_a) = eps_a e_{-a}; eps is indexed by root.
LieElement sigma(const LieElement& x, const std::vector<int>& eps);

struct HodgeDatum;  // hodge.hpp

struct ClauseResult {
  std::string clause;
  bool passed = true;
  std::int64_t checked = 0;
  std::string first_failure;
};

struct WeylPropertyReport {
  std::vector<ClauseResult> clauses;
  bool all_passed() const {
    for (auto& c : clauses)
      if (!c.passed) return false;
    return true;
  }
};

// Exhaustive check of the Weyl-basis laws (a)-(g) plus the zero-sum-quadruple
// cocycle identity, against a Hodge datum supplying the compactness signs.
WeylPropertyReport verify_weyl_properties(const WeylBasis& wb, const HodgeDatum& hd);

}  // namespace perioddomain
