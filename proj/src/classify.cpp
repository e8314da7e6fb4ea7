#include "perioddomain/classify.hpp"

namespace perioddomain {

std::string to_string(LatticeVerdict v) {
  switch (v) {
    case LatticeVerdict::NotKahlerLattice: return "NotKahlerLattice";
    case LatticeVerdict::KahlerViaHermitian: return "KahlerViaHermitian";
    case LatticeVerdict::BelowThreshold: return "BelowThreshold";
    default: return "NotHodgeType";
  }
}

bool is_hodge_type(const RealFormRecord& rec) { return rec.equal_rank(); }

bool is_hermitian(const RealFormRecord& rec) {
  // The Hermitian families, plus SO(2,q) inside the orthogonal family and
  // the two Hermitian exceptional forms. SL(2,R) is SU(1,1).
  if (rec.family == "SU(p,q)" || rec.family == "Sp(n,R)" || rec.family == "SO*(2n)") return true;
  if (rec.name == "SL(2,R)") return true;
  if (rec.family == "SO(p,q)") {
    auto lp = rec.name.find('('), comma = rec.name.find(',');
    int p = std::stoi(rec.name.substr(lp + 1, comma - lp - 1));
    int q = std::stoi(rec.name.substr(comma + 1, rec.name.size() - comma - 2));
    return p == 2 || q == 2;
  }
  if (rec.family == "exceptional")
    return rec.name == "E6(-14)" || rec.name == "E7(-25)";
  return false;
}

LatticeVerdict lattice_verdict(const RealFormRecord& rec) {
  if (is_hermitian(rec)) return LatticeVerdict::KahlerViaHermitian;
  if (!is_hodge_type(rec)) return LatticeVerdict::NotHodgeType;
  if (rec.real_rank >= 20) return LatticeVerdict::NotKahlerLattice;
  return LatticeVerdict::BelowThreshold;
}

Rational matsushima_bound(int real_rank) { return Rational(real_rank, 4) - Rational(1); }

Rational matsushima_bound(const RealFormRecord& rec) { return matsushima_bound(rec.real_rank); }

}  // namespace perioddomain
