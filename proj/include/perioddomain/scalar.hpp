#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "perioddomain/rational.hpp"

namespace perioddomain {

// Element of Q(i)[sqrt(r1), sqrt(r2), ...]: a finite sum of terms
// (a + b*i) * sqrt(rad) with rad a squarefree positive integer (rad == 1 is
// the rational part). Square roots of rationals are normalized as
// sqrt(p/q) = sqrt(p*q)/q. Terms are kept sorted by radicand, coefficients
// never zero, so equality is coefficient-wise and decidable.
//
// This is the scalar domain for the Weyl basis: the rescaling from an
// integral Chevalley basis introduces square roots of the half-squared root
// lengths, and horizontal vectors carry Gaussian-integer components. No
// floating point is used anywhere.
class Scalar {
 public:
  struct Term {
    std::int64_t rad;  // squarefree, >= 1
    Rational re;
    Rational im;
  };

  Scalar() = default;
  Scalar(std::int64_t n) { *this = Scalar(Rational(n)); }
  Scalar(const Rational& r) {
    if (!r.is_zero()) terms_.push_back({1, r, Rational()});
  }

  static Scalar imaginary_unit() {
    Scalar s;
    s.terms_.push_back({1, Rational(), Rational(1)});
    return s;
  }

  static Scalar gaussian(const Rational& re, const Rational& im) {
    Scalar s;
    if (!re.is_zero() || !im.is_zero()) s.terms_.push_back({1, re, im});
    return s;
  }

  // sqrt of a positive rational, as an exact element.
  static Scalar sqrt_of(const Rational& r) {
    if (r.sign() < 0) throw std::domain_error("sqrt of negative rational");
    if (r.is_zero()) return Scalar();
    // sqrt(p/q) = sqrt(p*q) / q
    std::int64_t pq = detail::narrow((__int128)r.num() * r.den());
    auto [sq, rad] = split_square(pq);
    Scalar s;
    s.terms_.push_back({rad, Rational(sq, r.den()), Rational()});
    return s;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_real() const {
    for (auto& t : terms_)
      if (!t.im.is_zero()) return false;
    return true;
  }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].rad == 1 && terms_[0].im.is_zero());
  }
  Rational to_rational() const {
    if (terms_.empty()) return Rational();
    if (!is_rational()) throw std::domain_error("scalar is not rational: " + str());
    return terms_[0].re;
  }

  const std::vector<Term>& terms() const { return terms_; }

  Scalar conj() const {
    Scalar s = *this;
    for (auto& t : s.terms_) t.im = -t.im;
    return s;
  }

  Scalar operator-() const {
    Scalar s = *this;
    for (auto& t : s.terms_) {
      t.re = -t.re;
      t.im = -t.im;
    }
    return s;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar out;
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].rad < b.terms_[j].rad)) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].rad < a.terms_[i].rad) {
        out.terms_.push_back(b.terms_[j++]);
      } else {
        Term t{a.terms_[i].rad, a.terms_[i].re + b.terms_[j].re, a.terms_[i].im + b.terms_[j].im};
        if (!t.re.is_zero() || !t.im.is_zero()) out.terms_.push_back(t);
        ++i;
        ++j;
      }
    }
    return out;
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar out;
    for (auto& ta : a.terms_)
      for (auto& tb : b.terms_) {
        // sqrt(r1)*sqrt(r2) = g*sqrt(r1r2/g^2), g = gcd(r1,r2); both squarefree.
        std::int64_t g = std::gcd(ta.rad, tb.rad);
        std::int64_t rad = detail::narrow((__int128)(ta.rad / g) * (tb.rad / g));
        Rational f(g);
        Rational re = (ta.re * tb.re - ta.im * tb.im) * f;
        Rational im = (ta.re * tb.im + ta.im * tb.re) * f;
        Scalar piece;
        if (!re.is_zero() || !im.is_zero()) piece.terms_.push_back({rad, re, im});
        out = out + piece;
      }
    return out;
  }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].rad != b.terms_[i].rad || a.terms_[i].re != b.terms_[i].re ||
          a.terms_[i].im != b.terms_[i].im)
        return false;
    }
    return true;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // |z|^2 = z * conj(z); real by construction.
  Scalar abs2() const { return *this * conj(); }

  // Exact serialization, e.g. "3/2", "1/2·√6", "(1+2i)·√3", "-1/2+i".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& t : terms_) {
      std::string coeff = gaussian_str(t.re, t.im);
      std::string piece;
      if (t.rad == 1) {
        piece = coeff;
      } else if (coeff == "1") {
        piece = radical_str(t.rad);
      } else if (coeff == "-1") {
        piece = "-" + radical_str(t.rad);
      } else {
        bool needs_parens = coeff.find('+') != std::string::npos ||
                            coeff.find('i') != std::string::npos ||
                            coeff.find('-', 1) != std::string::npos;
        piece = (needs_parens ? "(" + coeff + ")" : coeff) + "·" + radical_str(t.rad);
      }
      if (!first && piece[0] != '-') out += "+";
      out += piece;
      first = false;
    }
    return out;
  }

  double approx_re() const {
    double v = 0;
    for (auto& t : terms_) v += t.re.approx() * std::sqrt(double(t.rad));
    return v;
  }

 private:
  static std::string radical_str(std::int64_t rad) { return "√" + std::to_string(rad); }

  static std::string gaussian_str(const Rational& re, const Rational& im) {
    if (im.is_zero()) return re.str();
    std::string istr = im == Rational(1) ? "i" : im == Rational(-1) ? "-i" : im.str() + "i";
    if (re.is_zero()) return istr;
    return re.str() + (istr[0] == '-' ? "" : "+") + istr;
  }

  // n = sq^2 * rad with rad squarefree (trial division; radicands stay small).
  static std::pair<std::int64_t, std::int64_t> split_square(std::int64_t n) {
    std::int64_t sq = 1, rad = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      for (int k = 0; k + 1 < e; k += 2) sq *= p;
      if (e % 2) rad *= p;
    }
    rad *= n;
    return {sq, rad};
  }

  std::vector<Term> terms_;
};

}  // namespace perioddomain
