#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "perioddomain/chevalley.hpp"
#include "perioddomain/hodge.hpp"

namespace perioddomain {

struct not_horizontal : std::runtime_error {
  not_horizontal() : std::runtime_error("root is not horizontal for this datum") {}
};
struct non_commuting : std::runtime_error {
  non_commuting() : std::runtime_error("vectors do not commute") {}
};

// A horizontal vector xi = sum xi^a e_a, a in Delta^{-1,1}.
class HorizontalVector {
 public:
  HorizontalVector(const WeylBasis& wb, const HodgeDatum& hd) : wb_(&wb), hd_(&hd) {}

  void set(int root_idx, const Scalar& c);
  Scalar coeff(int root_idx) const;
  const std::map<int, Scalar>& components() const { return comp_; }
  bool is_zero() const { return comp_.empty(); }

  LieElement element() const;
  const WeylBasis& basis() const { return *wb_; }
  const HodgeDatum& datum() const { return *hd_; }

 private:
  const WeylBasis* wb_;
  const HodgeDatum* hd_;
  std::map<int, Scalar> comp_;
};

// Four-index coefficient of the tensor Xi on horizontal roots: the closed
// three-case table (zero unless a+b = c+e, the diagonal carrying
// N_{a,-b}^2 + <a,b>, the generic case -N_{a,b}N_{c,e}).
Scalar xi_coefficient(const WeylBasis& wb, const HodgeDatum& hd, int a, int b, int c, int e);

// Direct evaluation of Xi(xi ^ eta ^ conj xi ^ conj eta) from brackets and
// the Killing pairing on the degree-0 part; no commutativity assumed.
Scalar xi_eval_direct(const WeylBasis& wb, const HodgeDatum& hd, const HorizontalVector& xi,
                      const HorizontalVector& eta);

// The closed-form sum over <_t-ordered pairs, valid for commuting inputs;
// throws non_commuting otherwise.
Scalar xi_eval_commuting(const WeylBasis& wb, const HodgeDatum& hd, const HorizontalVector& xi,
                         const HorizontalVector& eta);

// N_{a,-b}^2 + <a,b> + N_{a,b}^2 for distinct horizontal roots; always a
// nonnegative rational.
Rational diagonal_coefficient(const WeylBasis& wb, const HodgeDatum& hd, int a, int b);

struct PairBranch {
  int a, b;
  Rational value;
  std::string branch;  // "inner-nonnegative", "string-identity", "general"
};

struct NonnegativityReport {
  bool has_pairs = false;
  Rational min_value;
  std::int64_t pairs_checked = 0;
  std::vector<PairBranch> violations;  // empty expected
  std::vector<PairBranch> branches;    // one entry per pair
};

NonnegativityReport verify_nonnegativity(const WeylBasis& wb, const HodgeDatum& hd);

enum class BlockPositivity { StrictlyPositive, NotTotallyOrdered, HasZeroPair };
std::string to_string(BlockPositivity b);

BlockPositivity block_positivity(const WeylBasis& wb, const HodgeDatum& hd, const Block& block);

// -[xi, sigma(xi)], landing in the degree-0 part (asserted).
LieElement theta_pair(const WeylBasis& wb, const HodgeDatum& hd, const HorizontalVector& xi);

enum class PairStrategy { basis, random_support };

// Commuting horizontal pairs; every emitted pair is re-verified with the
// bracket. The random strategy draws small Gaussian-integer components on a
// greedily built pairwise-non-adding support, seeded and reproducible.
std::vector<std::pair<HorizontalVector, HorizontalVector>> commuting_pairs(
    const HodgeDatum& hd, const WeylBasis& wb, PairStrategy strategy, std::uint64_t seed = 0,
    int count = 0);

}  // namespace perioddomain
