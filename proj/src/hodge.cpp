#include "perioddomain/hodge.hpp"

#include <algorithm>
#include <stdexcept>

namespace perioddomain {

std::string HodgeDatum::str() const {
  std::string s = rs->type().str() + " marking [";
  for (std::size_t i = 0; i < marking.size(); ++i)
    s += (i ? "," : "") + std::to_string(marking[i]);
  return s + "]";
}

HodgeDatum from_marking(const RootSystem& rs, const std::vector<int>& marking) {
  if (int(marking.size()) != rs.rank())
    throw std::invalid_argument("marking size does not match rank");
  for (int m : marking)
    if (m < 0) throw negative_marking{};

  HodgeDatum hd;
  hd.rs = &rs;
  hd.marking = marking;
  hd.trivial = std::all_of(marking.begin(), marking.end(), [](int m) { return m == 0; });

  hd.degree.resize(rs.num_roots());
  hd.eps.resize(rs.num_roots());
  for (int i = 0; i < rs.num_roots(); ++i) {
    long long d = 0;
    for (int t = 0; t < rs.rank(); ++t) d += (long long)rs.root(i)[t] * marking[t];
    hd.degree[i] = int(d);
    hd.eps[i] = (d % 2 != 0) ? +1 : -1;
  }
  // Additivity of the degree is linear algebra, but it is part of the
  // datum's contract, so it is verified here once per construction.
  for (int i = 0; i < rs.num_roots(); ++i)
    for (int j = 0; j < rs.num_roots(); ++j) {
      int s = rs.sum(i, j);
      if (s >= 0 && hd.degree[s] != hd.degree[i] + hd.degree[j])
        throw std::logic_error("degree not additive");
    }

  for (int t = 0; t < rs.rank(); ++t)
    if (marking[t] == 0) hd.phi.push_back(t);

  for (int i = 0; i < rs.num_positive(); ++i)
    if (hd.degree[i] == 1) hd.horizontal.push_back(i);
  std::sort(hd.horizontal.begin(), hd.horizontal.end(),
            [&](int a, int b) { return rs.root(a) < rs.root(b); });
  return hd;
}

bool is_hermitian_grading(const HodgeDatum& hd) {
  for (int i = 0; i < hd.rs->num_roots(); ++i)
    if (hd.degree[i] < -1 || hd.degree[i] > 1) return false;
  return true;
}

std::vector<Block> blocks(const HodgeDatum& hd) {
  const RootSystem& rs = *hd.rs;
  std::vector<Block> out;
  std::vector<int> anchor_of_simple(rs.rank(), -1);
  for (int t = 0; t < rs.rank(); ++t)
    if (hd.marking[t] == 1) {
      anchor_of_simple[t] = int(out.size());
      out.push_back({t, {}});
    }
  std::size_t assigned = 0;
  for (int g : hd.horizontal) {
    // gamma has degree 1, so exactly one marked simple root appears in it,
    // with coefficient 1 and marking 1; that root is the anchor.
    int anchor = -1;
    for (int t = 0; t < rs.rank(); ++t)
      if (rs.root(g)[t] > 0 && hd.marking[t] > 0) {
        anchor = t;
        break;
      }
    if (anchor < 0 || anchor_of_simple[anchor] < 0)
      throw std::logic_error("horizontal root without block anchor");
    out[anchor_of_simple[anchor]].roots.push_back(g);
    ++assigned;
  }
  if (assigned != hd.horizontal.size())
    throw std::logic_error("blocks do not cover the horizontal roots");
  return out;
}

ParabolicData parabolic_data(const HodgeDatum& hd) {
  ParabolicData p;
  for (int i = 0; i < hd.rs->num_roots(); ++i) {
    if (hd.degree[i] == 0) p.levi_roots.push_back(i);
    if (hd.degree[i] < 0) p.nilradical_roots.push_back(i);
  }
  return p;
}

}  // namespace perioddomain
