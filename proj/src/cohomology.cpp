#include "perioddomain/cohomology.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace perioddomain {

Poly hirsch_polynomial(const std::vector<int>& s, const std::vector<int>& r) {
  if (s.size() != r.size()) throw non_polynomial_quotient{};
  // Numerator prod (1 - t^{s_i}).
  Poly p{1};
  for (int e : s) {
    if (e <= 0) throw non_polynomial_quotient{};
    Poly q(p.size() + e, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] += p[i];
      q[i + e] -= p[i];
    }
    p = std::move(q);
  }
  // Divide by each (1 - t^{e}) from the lowest term up: q_i = p_i + q_{i-e},
  // with exactness checked on the top coefficients.
  for (int e : r) {
    if (e <= 0 || int(p.size()) <= e) throw non_polynomial_quotient{};
    Poly q(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i)
      q[i] = p[i] + (i >= std::size_t(e) ? q[i - e] : 0);
    for (std::size_t i = p.size() - e; i < p.size(); ++i)
      if (q[i] != 0) throw non_polynomial_quotient{};
    q.resize(p.size() - e);
    p = std::move(q);
  }
  for (std::int64_t c : p)
    if (c < 0) throw non_polynomial_quotient{};
  return p;
}

std::string SubsystemType::str() const {
  std::string out;
  for (auto& f : factors) out += (out.empty() ? "" : "+") + f.str();
  for (int i = 0; i < torus; ++i) out += (out.empty() ? "" : "+") + std::string("T1");
  return out.empty() ? "0" : out;
}

namespace {

TypeName canonical(TypeName t) {
  if (t.series == Series::D && t.rank == 3) return {Series::A, 3};
  if (t.series == Series::D && t.rank == 2) throw std::logic_error("D2 is not connected");
  if (t.series == Series::C && t.rank == 2) return {Series::B, 2};
  if ((t.series == Series::B || t.series == Series::C) && t.rank == 1) return {Series::A, 1};
  return t;
}

TypeName identify_component(const RootSystem& rs, const std::vector<int>& simples) {
  int n = int(simples.size());
  if (n == 1) return {Series::A, 1};
  // Edge multiplicities m_ij = n_ij * n_ji and degrees in the Dynkin graph.
  std::vector<std::vector<int>> adj(n);
  int max_mult = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational ip = rs.inner(simples[i], simples[j]);
      if (ip.is_zero()) continue;
      long long nij = rs.cartan_pairing(simples[i], simples[j]);
      long long nji = rs.cartan_pairing(simples[j], simples[i]);
      max_mult = std::max<long long>(max_mult, nij * nji);
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
  if (max_mult == 3) return {Series::G, 2};

  int forks = 0, fork_at = -1;
  for (int i = 0; i < n; ++i) {
    if (int(adj[i].size()) > 3) throw std::logic_error("invalid Dynkin component");
    if (int(adj[i].size()) == 3) {
      ++forks;
      fork_at = i;
    }
  }
  if (forks > 1) throw std::logic_error("invalid Dynkin component");

  if (forks == 1) {
    // Arm lengths from the fork.
    std::vector<int> arms;
    for (int nb : adj[fork_at]) {
      int len = 1, prev = fork_at, cur = nb;
      for (;;) {
        int next = -1;
        for (int x : adj[cur])
          if (x != prev) next = x;
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return canonical({Series::D, arms[2] + 3});
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
      return {Series::E, arms[2] + 4};
    throw std::logic_error("invalid fork in Dynkin component");
  }

  if (max_mult == 1) return {Series::A, n};

  // A chain with one double edge: B, C or F4, told apart by where the short
  // roots sit.
  int longs = 0;
  Rational dmax;
  for (int i = 0; i < n; ++i) {
    Rational d = rs.inner(simples[i], simples[i]);
    if (dmax < d) dmax = d;
  }
  for (int i = 0; i < n; ++i)
    if (rs.inner(simples[i], simples[i]) == dmax) ++longs;
  if (n == 4 && longs == 2) return {Series::F, 4};
  if (longs == n - 1) return canonical({Series::B, n});
  if (longs == 1) return canonical({Series::C, n});
  throw std::logic_error("invalid multiply-laced Dynkin component");
}

}  // namespace

SubsystemType classify_subsystem(const RootSystem& rs, const std::vector<int>& roots) {
  std::vector<int> pos;
  for (int i : roots)
    if (rs.is_positive(i)) pos.push_back(i);
  std::sort(pos.begin(), pos.end());
  // Simple roots of the subsystem: positives that are not sums of two
  // positives of the subsystem.
  std::vector<int> simples;
  for (int d : pos) {
    bool decomposable = false;
    for (int g : pos) {
      if (g == d) continue;
      RootCoords rest = rs.root(d);
      for (int t = 0; t < rs.rank(); ++t) rest[t] -= rs.root(g)[t];
      int idx = rs.index_of(rest);
      if (idx >= 0 && std::binary_search(pos.begin(), pos.end(), idx)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simples.push_back(d);
  }
  // Connected components of the Dynkin graph on the subsystem simples.
  int n = int(simples.size());
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j)
        if (comp[j] < 0 && !rs.inner(simples[x], simples[j]).is_zero()) {
          comp[j] = ncomp;
          stack.push_back(j);
        }
    }
    ++ncomp;
  }
  SubsystemType out;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> cs;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) cs.push_back(simples[i]);
    out.factors.push_back(identify_component(rs, cs));
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const TypeName& a, const TypeName& b) {
    if (a.series != b.series) return a.series < b.series;
    return a.rank < b.rank;
  });
  out.torus = rs.rank() - n;
  return out;
}

bool SymmetricPair::equal_rank() const {
  int rk = k_torus;
  for (auto& f : k_factors) rk += f.rank;
  return rk == u.rank;
}

int SymmetricPair::dim_u() const {
  // dim U = #roots + rank; #roots from the degree identity 2|Delta_+| =
  // 2 * sum (d_i - 1).
  WeylData wd = invariant_degrees(u.series, u.rank);
  int pos = 0;
  for (int d : wd.poly_degrees) pos += d - 1;
  return 2 * pos + u.rank;
}

std::vector<int> u_degrees(const SymmetricPair& p) {
  return invariant_degrees(p.u.series, p.u.rank).cohomological_degrees;
}

std::vector<int> k_degrees(const SymmetricPair& p) {
  std::vector<int> r;
  for (auto& f : p.k_factors) {
    auto wd = invariant_degrees(f.series, f.rank);
    r.insert(r.end(), wd.cohomological_degrees.begin(), wd.cohomological_degrees.end());
  }
  for (int i = 0; i < p.k_torus; ++i) r.push_back(2);
  std::sort(r.begin(), r.end());
  return r;
}

Poly poincare_polynomial(const SymmetricPair& p) {
  if (!p.equal_rank()) throw non_equal_rank{};
  return hirsch_polynomial(u_degrees(p), k_degrees(p));
}

std::pair<int, int> low_betti_branch(const SymmetricPair& p) {
  int h2 = p.hermitian ? 1 : 0;
  int h4 = p.k_simple() ? 0 : p.hermitian ? 2 : 1;
  return {h2, h4};
}

std::pair<int, int> low_betti(const SymmetricPair& p) {
  if (p.dim_u() <= 3) throw not_irreducible("low_betti requires dim U > 3: " + p.name);
  if (!p.equal_rank()) return low_betti_branch(p);
  Poly P = poincare_polynomial(p);
  int h2 = P.size() > 2 ? int(P[2]) : 0;
  int h4 = P.size() > 4 ? int(P[4]) : 0;
  return {h2, h4};
}

std::int64_t euler_characteristic(const SymmetricPair& p) {
  if (!p.equal_rank()) throw non_equal_rank{};
  std::int64_t wu = invariant_degrees(p.u.series, p.u.rank).order;
  std::int64_t wk = 1;
  for (auto& f : p.k_factors)
    wk = detail::narrow((__int128)wk * invariant_degrees(f.series, f.rank).order);
  if (wu % wk != 0) throw std::logic_error("Weyl order not divisible");
  return wu / wk;
}

PontryaginResult pontryagin_nonvanishing(const SymmetricPair& p) {
  if (!p.equal_rank() || p.marking.empty()) throw non_equal_rank{};
  RootSystem rs = RootSystem::build(p.u);
  HodgeDatum hd = from_marking(rs, p.marking);

  int r = rs.rank();
  auto quad = [&](bool even_only) {
    std::vector<Rational> m(std::size_t(r) * r, Rational(0));
    for (int g = 0; g < rs.num_roots(); ++g) {
      if (even_only && hd.degree[g] % 2 != 0) continue;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          m[std::size_t(i) * r + j] += Rational(rs.root(g)[i]) * Rational(rs.root(g)[j]);
    }
    return m;
  };
  PontryaginResult res;
  res.q_k = quad(true);
  res.q_u = quad(false);

  // q_k lies in span{q_U} iff the two matrices are proportional; the class of
  // p1(F) in H^4(U/K) is nonzero exactly when they are not.
  Rational ratio;
  bool have_ratio = false;
  bool proportional = true;
  for (std::size_t i = 0; i < res.q_u.size() && proportional; ++i) {
    if (res.q_u[i].is_zero()) {
      if (!res.q_k[i].is_zero()) proportional = false;
      continue;
    }
    Rational q = res.q_k[i] / res.q_u[i];
    if (!have_ratio) {
      ratio = q;
      have_ratio = true;
    } else if (q != ratio) {
      proportional = false;
    }
  }
  res.nonvanishing = !proportional;
  res.detail = proportional
                   ? "q_k = (" + ratio.str() + ") * q_U: class of p1(F) vanishes in H^4"
                   : "q_k independent of q_U: p1(F) nonzero in H^4";
  return res;
}

}  // namespace perioddomain
