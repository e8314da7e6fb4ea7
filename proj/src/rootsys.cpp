#include "perioddomain/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace perioddomain {

TypeName parse_type(const std::string& name) {
  if (name.size() < 2) throw invalid_type("bad type designator: " + name);
  char s = name[0];
  int rank = 0;
  try {
    std::size_t pos = 0;
    rank = std::stoi(name.substr(1), &pos);
    if (pos + 1 != name.size()) throw std::invalid_argument(name);
  } catch (const std::exception&) {
    throw invalid_type("bad type designator: " + name);
  }
  Series series;
  switch (s) {
    case 'A': series = Series::A; break;
    case 'B': series = Series::B; break;
    case 'C': series = Series::C; break;
    case 'D': series = Series::D; break;
    case 'E': series = Series::E; break;
    case 'F': series = Series::F; break;
    case 'G': series = Series::G; break;
    default: throw invalid_type("bad type designator: " + name);
  }
  // Range check happens in cartan_matrix; call it for the side effect.
  cartan_matrix(series, rank);
  return {series, rank};
}

std::vector<std::vector<int>> cartan_matrix(Series series, int rank) {
  auto bad = [&] {
    throw invalid_type("invalid simple type " + std::string(1, char(series)) +
                       std::to_string(rank));
  };
  int n = rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  };
  switch (series) {
    case Series::A:
      if (n < 1) bad();
      chain(n);
      break;
    case Series::B:
      if (n < 2) bad();
      chain(n);
      a[n - 2][n - 1] = -2;  // alpha_{n-1} long, alpha_n short
      break;
    case Series::C:
      if (n < 3) bad();
      chain(n);
      a[n - 1][n - 2] = -2;  // alpha_n long
      break;
    case Series::D:
      if (n < 4) bad();
      chain(n - 1);
      a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
      break;
    case Series::E: {
      if (n < 6 || n > 8) bad();
      // Bourbaki: chain 1-3-4-5-...-n, node 2 attached to node 4.
      std::vector<int> chain_nodes = {0, 2, 3, 4, 5, 6, 7};
      chain_nodes.resize(n - 1);
      for (std::size_t i = 0; i + 1 < chain_nodes.size(); ++i) {
        a[chain_nodes[i]][chain_nodes[i + 1]] = -1;
        a[chain_nodes[i + 1]][chain_nodes[i]] = -1;
      }
      a[1][3] = a[3][1] = -1;
      break;
    }
    case Series::F:
      if (n != 4) bad();
      chain(4);
      a[1][2] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      break;
    case Series::G:
      if (n != 2) bad();
      a[0][1] = -1;
      a[1][0] = -3;  // alpha_1 short, alpha_2 long
      break;
    default:
      bad();
  }
  return a;
}

WeylData invariant_degrees(Series series, int rank) {
  cartan_matrix(series, rank);  // validates the type
  std::vector<int> d;
  switch (series) {
    case Series::A:
      for (int i = 2; i <= rank + 1; ++i) d.push_back(i);
      break;
    case Series::B:
    case Series::C:
      for (int i = 1; i <= rank; ++i) d.push_back(2 * i);
      break;
    case Series::D:
      for (int i = 1; i + 1 <= rank; ++i) d.push_back(2 * i);
      d.push_back(rank);
      std::sort(d.begin(), d.end());
      break;
    case Series::E:
      if (rank == 6) d = {2, 5, 6, 8, 9, 12};
      if (rank == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (rank == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Series::F: d = {2, 6, 8, 12}; break;
    case Series::G: d = {2, 6}; break;
  }
  WeylData w;
  w.poly_degrees = d;
  for (int x : d) {
    w.order = detail::narrow((__int128)w.order * x);
    w.cohomological_degrees.push_back(2 * x);
  }
  return w;
}

namespace {
std::string key_of(const RootCoords& c) {
  std::string k;
  k.reserve(c.size() * 3);
  for (int x : c) {
    k += std::to_string(x);
    k += ',';
  }
  return k;
}
}  // namespace

RootSystem RootSystem::build(Series series, int rank, Normalization norm) {
  RootSystem rs;
  rs.series_ = series;
  rs.rank_ = rank;
  rs.norm_ = norm;
  rs.cartan_ = perioddomain::cartan_matrix(series, rank);

  // Reflection closure from the simple roots: s_j(b) = b - (sum_i b_i A_ij) a_j.
  std::set<RootCoords> seen;
  std::deque<RootCoords> queue;
  for (int i = 0; i < rank; ++i) {
    RootCoords e(rank, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RootCoords b = queue.front();
    queue.pop_front();
    for (int j = 0; j < rank; ++j) {
      long long pairing = 0;
      for (int i = 0; i < rank; ++i) pairing += (long long)b[i] * rs.cartan_[i][j];
      RootCoords r = b;
      r[j] -= int(pairing);
      if (seen.insert(r).second) queue.push_back(r);
    }
  }

  std::vector<RootCoords> positives;
  for (auto& r : seen) {
    bool pos = true, neg = true;
    for (int x : r) {
      if (x < 0) pos = false;
      if (x > 0) neg = false;
    }
    if (!pos && !neg) throw std::logic_error("root with mixed signs");
    if (pos) positives.push_back(r);
  }
  auto ht = [](const RootCoords& r) {
    int h = 0;
    for (int x : r) h += x;
    return h;
  };
  std::sort(positives.begin(), positives.end(), [&](const RootCoords& a, const RootCoords& b) {
    int ha = ht(a), hb = ht(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  rs.num_positive_ = int(positives.size());
  rs.roots_ = positives;
  for (auto& r : positives) {
    RootCoords m = r;
    for (int& x : m) x = -x;
    rs.roots_.push_back(m);
  }
  for (int i = 0; i < int(rs.roots_.size()); ++i) {
    rs.heights_.push_back(ht(rs.roots_[i]));
    rs.index_[key_of(rs.roots_[i])] = i;
  }

  // Gram matrix. Relative simple-root lengths d_i from the Cartan matrix
  // (d_i * A_ji = d_j * A_ij), scaled so the long roots have squared length 2,
  // then rescaled to the Killing-dual form via the trace identity
  // sum_{gamma in Delta} <gamma,a><gamma,b> = <a,b>.
  std::vector<Rational> d(rank, Rational(0));
  d[0] = Rational(1);
  {
    std::deque<int> bfs{0};
    while (!bfs.empty()) {
      int i = bfs.front();
      bfs.pop_front();
      for (int j = 0; j < rank; ++j) {
        if (i != j && rs.cartan_[i][j] != 0 && d[j].is_zero()) {
          d[j] = d[i] * Rational(rs.cartan_[j][i], rs.cartan_[i][j]);
          bfs.push_back(j);
        }
      }
    }
  }
  Rational dmax(0);
  for (auto& x : d)
    if (dmax < x) dmax = x;
  for (auto& x : d) x = x / dmax;  // long simple roots now have d = 1
  std::vector<std::vector<Rational>> b0(rank, std::vector<Rational>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) b0[i][j] = d[j] * Rational(rs.cartan_[i][j]);  // (a_i,a_j)

  Rational scale;
  if (norm.kind == Normalization::bourbaki) {
    scale = Rational(1);
  } else {
    // lambda = sum_gamma B0(gamma, v)^2 / B0(v,v) for any root v; t = 1/lambda.
    auto b0_pair = [&](const RootCoords& x, const RootCoords& y) {
      Rational s;
      for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
          if (x[i] && y[j]) s += Rational(x[i]) * Rational(y[j]) * b0[i][j];
      return s;
    };
    RootCoords v = rs.roots_[0];
    Rational lambda;
    for (auto& g : rs.roots_) {
      Rational p = b0_pair(g, v);
      lambda += p * p;
    }
    scale = b0_pair(v, v) / lambda;
  }
  scale = scale * norm.scale;
  rs.gram_.assign(rank, std::vector<Rational>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.gram_[i][j] = b0[i][j] * scale;

  // Root sum table.
  int m = int(rs.roots_.size());
  rs.sum_table_.assign(std::size_t(m) * m, -1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      RootCoords s = rs.roots_[i];
      bool zero = true;
      for (int k = 0; k < rank; ++k) {
        s[k] += rs.roots_[j][k];
        if (s[k] != 0) zero = false;
      }
      rs.sum_table_[std::size_t(i) * m + j] = zero ? -2 : rs.index_of(s);
    }
  return rs;
}

int RootSystem::index_of(const RootCoords& c) const {
  auto it = index_.find(key_of(c));
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::index_of_checked(const RootCoords& c) const {
  int idx = index_of(c);
  if (idx < 0) throw not_a_root("coordinates do not name a root");
  return idx;
}

Rational RootSystem::inner(int i, int j) const {
  return inner_coords(roots_[i], roots_[j]);
}

Rational RootSystem::inner_coords(const RootCoords& a, const RootCoords& b) const {
  Rational s;
  for (int i = 0; i < rank_; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < rank_; ++j)
      if (b[j]) s += Rational(a[i]) * Rational(b[j]) * gram_[i][j];
  }
  return s;
}

std::int64_t RootSystem::cartan_pairing(int i, int j) const {
  Rational v = Rational(2) * inner(i, j) / inner(j, j);
  if (!v.is_integer()) throw std::logic_error("non-integral Cartan pairing");
  return v.num();
}

int RootSystem::reflect(int i, int j) const {
  std::int64_t c = cartan_pairing(i, j);
  RootCoords r = roots_[i];
  for (int k = 0; k < rank_; ++k) r[k] -= int(c) * roots_[j][k];
  int idx = index_of(r);
  if (idx < 0) throw std::logic_error("reflection left the root set");
  return idx;
}

std::pair<int, int> RootSystem::root_string(int alpha, int beta) const {
  if (alpha == beta || alpha == negative(beta))
    throw not_a_root("root string undefined for beta = +-alpha");
  auto walk = [&](int dir) {
    int k = 0;
    RootCoords r = roots_[alpha];
    for (;;) {
      for (int t = 0; t < rank_; ++t) r[t] += dir * roots_[beta][t];
      if (index_of(r) < 0) break;
      ++k;
    }
    return k;
  };
  return {walk(-1), walk(+1)};
}

std::int64_t RootSystem::weyl_order_computed() const {
  std::vector<int> all(roots_.size());
  for (std::size_t i = 0; i < roots_.size(); ++i) all[i] = int(i);
  return weyl_order_of_subsystem(all);
}

// |W(S)| = |orbit of v| * |W(S  cap  v-perp)|; point stabilizers in reflection
// groups are themselves reflection subgroups (Steinberg), so the recursion is
// exact.
std::int64_t RootSystem::weyl_order_of_subsystem(std::vector<int> subsystem) const {
  if (subsystem.empty()) return 1;
  int v = subsystem[0];
  std::set<int> orbit{v};
  std::deque<int> queue{v};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int g : subsystem) {
      int y = reflect(x, g);
      if (orbit.insert(y).second) queue.push_back(y);
    }
  }
  std::vector<int> perp;
  for (int g : subsystem)
    if (inner(g, v).is_zero()) perp.push_back(g);
  return detail::narrow((__int128)orbit.size() * weyl_order_of_subsystem(perp));
}

}  // namespace perioddomain
