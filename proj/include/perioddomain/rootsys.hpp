#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "perioddomain/rational.hpp"

namespace perioddomain {

struct invalid_type : std::runtime_error {
  explicit invalid_type(const std::string& what) : std::runtime_error(what) {}
};
struct not_a_root : std::runtime_error {
  explicit not_a_root(const std::string& what) : std::runtime_error(what) {}
};

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// "A1".."A9", "B2".., "E6","E7","E8", "F4", "G2"
struct TypeName {
  Series series;
  int rank;
  std::string str() const { return std::string(1, char(series)) + std::to_string(rank); }
};
TypeName parse_type(const std::string& name);

// Which bilinear form the Gram matrix carries. The Killing-dual form is the
// default (it is the normalization every curvature formula here assumes);
// the Bourbaki form (long roots of squared length 2) is kept for cross-checks,
// and arbitrary positive rescalings for covariance tests.
struct Normalization {
  enum Kind { killing_dual, bourbaki } kind = killing_dual;
  Rational scale = Rational(1);  // extra positive factor on top of `kind`
};

struct WeylData {
  std::int64_t order = 1;
  std::vector<int> poly_degrees;            // degrees of basic invariants
  std::vector<int> cohomological_degrees;   // s_i = 2 * poly degree
};

WeylData invariant_degrees(Series series, int rank);

// A root, as integer coordinates over the simple roots.
using RootCoords = std::vector<int>;

class RootSystem {
 public:
  static RootSystem build(Series series, int rank, Normalization norm = {});
  static RootSystem build(const TypeName& t, Normalization norm = {}) {
    return build(t.series, t.rank, norm);
  }

  Series series() const { return series_; }
  int rank() const { return rank_; }
  TypeName type() const { return {series_, rank_}; }
  const Normalization& normalization() const { return norm_; }

  int num_roots() const { return int(roots_.size()); }
  int num_positive() const { return num_positive_; }
  const RootCoords& root(int idx) const { return roots_[idx]; }
  bool is_positive(int idx) const { return idx < num_positive_; }
  int height(int idx) const { return heights_[idx]; }

  // Index of a coordinate vector in the root list, or -1.
  int index_of(const RootCoords& c) const;
  int index_of_checked(const RootCoords& c) const;
  int negative(int idx) const { return idx < num_positive_ ? idx + num_positive_ : idx - num_positive_; }
  // Index of root(i)+root(j): -2 when the sum is zero, -1 when not a root.
  int sum(int i, int j) const { return sum_table_[std::size_t(i) * roots_.size() + j]; }

  // Killing-dual (or rescaled, per normalization) inner product.
  const std::vector<std::vector<Rational>>& gram() const { return gram_; }
  Rational inner(int i, int j) const;
  Rational inner_coords(const RootCoords& a, const RootCoords& b) const;
  // 2<a,b>/<b,b>, always an integer (crystallographic).
  std::int64_t cartan_pairing(int i, int j) const;

  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  // Index of the reflection s_{root(j)} applied to root(i).
  int reflect(int i, int j) const;

  // beta-string through alpha: alpha - p*beta, ..., alpha + q*beta.
  // Requires beta != +-alpha.
  std::pair<int, int> root_string(int alpha, int beta) const;

  // |W| by orbit-stabilizer over the reflection group, independent of tables.
  std::int64_t weyl_order_computed() const;

 private:
  Series series_;
  int rank_ = 0;
  Normalization norm_;
  int num_positive_ = 0;
  std::vector<RootCoords> roots_;  // positives sorted by (height, lex), then negatives
  std::vector<int> heights_;
  std::vector<std::vector<Rational>> gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> sum_table_;
  std::unordered_map<std::string, int> index_;

  std::int64_t weyl_order_of_subsystem(std::vector<int> subsystem) const;
};

// Simple-root Cartan matrix, Bourbaki numbering.
std::vector<std::vector<int>> cartan_matrix(Series series, int rank);

}  // namespace perioddomain
