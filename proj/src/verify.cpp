#include "perioddomain/verify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>

#include "perioddomain/classify.hpp"
#include "perioddomain/cohomology.hpp"

namespace perioddomain {

const std::vector<std::pair<std::string, std::vector<int>>>& hodge_catalog() {
  static const std::vector<std::pair<std::string, std::vector<int>>> data = {
      {"A1", {1}},
      {"A2", {1, 0}},
      {"A2", {1, 1}},
      {"A2", {2, 1}},
      {"A3", {0, 1, 0}},
      {"A3", {1, 0, 1}},
      {"A3", {0, 0, 1}},
      {"A3", {1, 1, 0}},
      {"A4", {0, 1, 0, 0}},
      {"A4", {1, 0, 0, 1}},
      {"B2", {1, 0}},
      {"B2", {0, 1}},
      {"B2", {1, 1}},
      {"B2", {2, 0}},
      {"B3", {1, 0, 0}},
      {"B3", {0, 0, 1}},
      {"B3", {0, 1, 0}},
      {"B4", {0, 1, 0, 0}},
      {"B4", {1, 0, 0, 0}},
      {"C3", {1, 0, 0}},
      {"C3", {0, 0, 1}},
      {"C3", {0, 1, 0}},
      {"C4", {1, 0, 0, 0}},
      {"C4", {0, 0, 0, 1}},
      {"D4", {1, 0, 0, 0}},
      {"D4", {0, 1, 0, 0}},
      {"D4", {0, 0, 0, 1}},
      {"G2", {1, 0}},
      {"G2", {0, 1}},
      {"G2", {1, 1}},
      {"F4", {1, 0, 0, 0}},
      {"F4", {0, 0, 0, 1}},
      {"F4", {0, 1, 0, 0}},
  };
  return data;
}

std::vector<TypeName> simple_types_up_to(int max_rank) {
  std::vector<TypeName> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({Series::A, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Series::B, n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({Series::C, n});
  for (int n = 4; n <= max_rank; ++n) out.push_back({Series::D, n});
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({Series::E, n});
  if (max_rank >= 4) out.push_back({Series::F, 4});
  if (max_rank >= 2) out.push_back({Series::G, 2});
  return out;
}

namespace {

// Weyl bases are expensive for large rank; build each type once per run.
class BasisCache {
 public:
  const WeylBasis& get(const TypeName& t) {
    auto it = cache_.find(t.str());
    if (it == cache_.end())
      it = cache_.emplace(t.str(), WeylBasis::build(RootSystem::build(t))).first;
    return it->second;
  }

 private:
  std::map<std::string, WeylBasis> cache_;
};

std::string pair_str(const RootSystem& rs, int a, int b) {
  auto one = [&](int i) {
    std::string s = "(";
    for (int t = 0; t < rs.rank(); ++t) s += (t ? "," : "") + std::to_string(rs.root(i)[t]);
    return s + ")";
  };
  return one(a) + "," + one(b);
}

// Zero-sum-quadruple cocycle violations at the Weyl level.
std::int64_t cocycle_violations(const WeylBasis& wb, std::string* first) {
  const RootSystem& rs = wb.roots();
  int m = rs.num_roots();
  std::int64_t bad = 0;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (b == rs.negative(a)) continue;
      for (int c = 0; c < m; ++c) {
        RootCoords d = rs.root(a);
        for (int t = 0; t < rs.rank(); ++t) d[t] = -(d[t] + rs.root(b)[t] + rs.root(c)[t]);
        int di = rs.index_of(d);
        if (di < 0) continue;
        if (c == rs.negative(a) || c == rs.negative(b) || di == rs.negative(a) ||
            di == rs.negative(b) || di == rs.negative(c))
          continue;
        Scalar v =
            wb.n(a, b) * wb.n(c, di) + wb.n(b, c) * wb.n(a, di) + wb.n(c, a) * wb.n(b, di);
        if (!v.is_zero()) {
          if (bad == 0 && first)
            *first = rs.type().str() + " at " + pair_str(rs, a, b) + "," + pair_str(rs, c, di);
          ++bad;
        }
      }
    }
  return bad;
}

template <typename Fn>
void parallel_over(int n, int threads, Fn&& fn) {
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::mutex take;
  int next = 0;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        int i;
        {
          std::lock_guard<std::mutex> lk(take);
          if (next >= n) return;
          i = next++;
        }
        fn(i);
      }
    });
  for (auto& th : pool) th.join();
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt) {
  std::vector<CriterionResult> results;
  BasisCache cache;

  auto add = [&](CriterionResult r) {
    r.passed = r.failures.empty();
    results.push_back(std::move(r));
  };

  // ---- 1. Structure constants: Jacobi + the Weyl-basis laws (a)-(d) ----
  {
    CriterionResult r;
    r.id = 1;
    r.name = "structure constants: Jacobi + Weyl-basis laws (a)-(d)";
    for (auto& t : simple_types_up_to(opt.max_rank)) {
      const WeylBasis& wb = cache.get(t);
      const RootSystem& rs = wb.roots();
      std::string witness;
      std::int64_t bad = jacobi_violations(wb.chevalley(), &witness);
      r.items_checked += rs.num_roots() * std::int64_t(rs.num_roots()) * rs.num_roots() / 6;
      if (bad) r.failures.push_back(t.str() + ": " + std::to_string(bad) + " Jacobi failures, first " + witness);
      // (a) kappa(e_a, e_b) = delta and [e_a, e_{-a}] = h_a; (b) coroot pairing.
      for (int i = 0; i < rs.num_roots() && r.failures.empty(); ++i) {
        LieElement e = LieElement::root_vector(wb, i);
        LieElement f = LieElement::root_vector(wb, rs.negative(i));
        if (killing(e, f) != Scalar(1) || !killing(e, e).is_zero())
          r.failures.push_back(t.str() + ": (a) pairing at root " + std::to_string(i));
        if (!(bracket(e, f) == LieElement::coroot(wb, i)))
          r.failures.push_back(t.str() + ": (a) [e,e^-] at root " + std::to_string(i));
        if (killing(LieElement::coroot(wb, i), LieElement::coroot(wb, i)) !=
            Scalar(rs.inner(i, i)))
          r.failures.push_back(t.str() + ": (b) at root " + std::to_string(i));
      }
      // (d) reality and the negation rule, at the table level.
      for (int i = 0; i < rs.num_roots(); ++i)
        for (int j = 0; j < rs.num_roots(); ++j) {
          if (rs.sum(i, j) < 0) continue;
          ++r.items_checked;
          if (!wb.n(i, j).is_real() || wb.n(rs.negative(i), rs.negative(j)) != -wb.n(i, j)) {
            r.failures.push_back(t.str() + ": (d) at " + pair_str(rs, i, j));
            break;
          }
        }
    }
    r.summary = "all simple types to rank " + std::to_string(opt.max_rank);
    add(std::move(r));
  }

  // ---- 2. Conjugation axioms (e)-(g) on every catalog Hodge datum ----
  {
    CriterionResult r;
    r.id = 2;
    r.name = "conjugation axioms: the laws (e)-(g) on the Hodge catalog";
    for (auto& [type, marking] : hodge_catalog()) {
      const WeylBasis& wb = cache.get(parse_type(type));
      HodgeDatum hd = from_marking(wb.roots(), marking);
      WeylPropertyReport rep = verify_weyl_properties(wb, hd);
      for (auto& c : rep.clauses) {
        r.items_checked += c.checked;
        if (!c.passed) r.failures.push_back(hd.str() + ": " + c.clause + ": " + c.first_failure);
      }
    }
    r.summary = std::to_string(hodge_catalog().size()) + " data";
    add(std::move(r));
  }

  // ---- 3. Cocycle identity, every algebra of rank <= 6 ----
  {
    CriterionResult r;
    r.id = 3;
    r.name = "cocycle identity on zero-sum quadruples, rank <= 6";
    for (auto& t : simple_types_up_to(std::min(6, opt.max_rank))) {
      const WeylBasis& wb = cache.get(t);
      std::string witness;
      std::int64_t bad = cocycle_violations(wb, &witness);
      r.items_checked += wb.roots().num_roots();
      if (bad) r.failures.push_back(witness + " (+" + std::to_string(bad - 1) + " more)");
    }
    add(std::move(r));
  }

  // ---- 4. Root-string identity N^2 = (k/2)<a,a> ----
  {
    CriterionResult r;
    r.id = 4;
    r.name = "root-string identity N(a,b)^2 = q(1+p)/2 <a,a>";
    for (auto& t : simple_types_up_to(opt.max_rank)) {
      const WeylBasis& wb = cache.get(t);
      const RootSystem& rs = wb.roots();
      for (int i = 0; i < rs.num_roots(); ++i)
        for (int j = 0; j < rs.num_roots(); ++j) {
          if (rs.sum(i, j) < 0) continue;
          auto [p, q] = rs.root_string(j, i);  // the i-string through j
          ++r.items_checked;
          if (wb.n_squared(i, j) != Rational(q * (1 + p), 2) * rs.inner(i, i)) {
            r.failures.push_back(t.str() + " at " + pair_str(rs, i, j));
          }
        }
    }
    add(std::move(r));
  }

  // ---- 5 & 6. Oracle equivalence and nonnegativity over the Hodge catalog ----
  CriterionResult r5;
    r5.id = 5;
    r5.name = "oracle equivalence: closed form == direct evaluation, exactly";
  CriterionResult r6;
    r6.id = 6;
    r6.name = "nonnegativity: diagonal coefficients and curvature values";
  {
    struct DatumOut {
      std::int64_t pairs = 0;
      std::vector<std::string> mismatches, negatives;
    };
    auto& data = hodge_catalog();
    std::vector<DatumOut> outs(data.size());
    // Bases are built up front so the parallel sweep only reads shared state.
    for (auto& [type, marking] : data) cache.get(parse_type(type));
    parallel_over(int(data.size()), opt.threads, [&](int di) {
      auto& [type, marking] = data[di];
      const WeylBasis& wb = cache.get(parse_type(type));  // pre-built above
      HodgeDatum hd = from_marking(wb.roots(), marking);
      DatumOut& out = outs[di];

      auto pairs = commuting_pairs(hd, wb, PairStrategy::basis);
      int want = std::max(0, opt.pairs_per_datum - int(pairs.size()));
      auto rnd = commuting_pairs(hd, wb, PairStrategy::random_support,
                                 opt.seed + std::uint64_t(di), want);
      pairs.insert(pairs.end(), std::make_move_iterator(rnd.begin()),
                   std::make_move_iterator(rnd.end()));
      for (auto& [xi, eta] : pairs) {
        ++out.pairs;
        Scalar closed = xi_eval_commuting(wb, hd, xi, eta);
        Scalar direct = xi_eval_direct(wb, hd, xi, eta);
        if (closed != direct)
          out.mismatches.push_back(hd.str() + ": closed " + closed.str() + " vs direct " +
                                   direct.str());
        if (closed.is_rational() && closed.to_rational().sign() < 0)
          out.negatives.push_back(hd.str() + ": negative curvature value " + closed.str());
      }
      // diagonal coefficients
      for (std::size_t i = 0; i < hd.horizontal.size(); ++i)
        for (std::size_t j = i + 1; j < hd.horizontal.size(); ++j) {
          Rational c = diagonal_coefficient(wb, hd, hd.horizontal[i], hd.horizontal[j]);
          if (c.sign() < 0)
            out.negatives.push_back(hd.str() + ": negative diagonal coefficient at " +
                                    pair_str(wb.roots(), hd.horizontal[i], hd.horizontal[j]));
        }
    });
    for (auto& out : outs) {
      r5.items_checked += out.pairs;
      for (auto& s : out.mismatches) r5.failures.push_back(s);
      r6.items_checked += out.pairs;
      for (auto& s : out.negatives) r6.failures.push_back(s);
    }
    r5.summary = std::to_string(r5.items_checked) + " commuting pairs over " +
                 std::to_string(data.size()) + " data";
  }
  add(std::move(r5));
  add(std::move(r6));

  // ---- 7. Block argument ----
  {
    CriterionResult r;
    r.id = 7;
    r.name = "block positivity and the vanishing locus on ordered blocks";
    for (auto& [type, marking] : hodge_catalog()) {
      const WeylBasis& wb = cache.get(parse_type(type));
      HodgeDatum hd = from_marking(wb.roots(), marking);
      for (auto& blk : blocks(hd)) {
        BlockPositivity bp = block_positivity(wb, hd, blk);
        ++r.items_checked;
        if (bp == BlockPositivity::NotTotallyOrdered) continue;
        if (bp == BlockPositivity::HasZeroPair) {
          // A totally ordered block that fails the strict-positivity claim.
          // Attach the witness pair, and say whether the curvature form
          // really does vanish on a nonproportional commuting pair there.
          std::string detail = "no vanishing commuting pair (coefficients stay positive)";
          for (std::size_t i = 0; i < blk.roots.size() && detail[0] == 'n'; ++i)
            for (std::size_t j = i + 1; j < blk.roots.size(); ++j) {
              int a = blk.roots[i], b = blk.roots[j];
              if (wb.roots().sum(a, b) == -1 &&
                  diagonal_coefficient(wb, hd, a, b).is_zero()) {
                detail = "curvature vanishes on the nonproportional commuting pair " +
                         pair_str(wb.roots(), a, b);
                break;
              }
            }
          r.failures.push_back(hd.str() + ": ordered block is HasZeroPair, not StrictlyPositive; " +
                               detail);
          continue;
        }
        // Strictly positive: every in-block coefficient is positive, and on
        // commuting basis pairs the form vanishes exactly on proportional
        // input (nonzero minors give a strictly positive value).
        for (std::size_t i = 0; i < blk.roots.size(); ++i)
          for (std::size_t j = i + 1; j < blk.roots.size(); ++j) {
            Rational c = diagonal_coefficient(wb, hd, blk.roots[i], blk.roots[j]);
            if (c.sign() <= 0)
              r.failures.push_back(hd.str() + ": zero coefficient inside a strictly positive block at " +
                                   pair_str(wb.roots(), blk.roots[i], blk.roots[j]));
          }
        for (std::size_t i = 0; i < blk.roots.size(); ++i)
          for (std::size_t j = i + 1; j < blk.roots.size(); ++j) {
            if (wb.roots().sum(blk.roots[i], blk.roots[j]) != -1) continue;
            HorizontalVector xi(wb, hd), eta(wb, hd);
            xi.set(blk.roots[i], Scalar(1));
            eta.set(blk.roots[j], Scalar(1));
            Scalar v = xi_eval_commuting(wb, hd, xi, eta);
            if (v.is_zero())
              r.failures.push_back(hd.str() + ": vanishing on a nonproportional block pair");
            HorizontalVector twice(wb, hd);
            twice.set(blk.roots[i], Scalar(2));
            if (!xi_eval_commuting(wb, hd, xi, twice).is_zero())
              r.failures.push_back(hd.str() + ": nonzero on a proportional block pair");
          }
      }
    }
    add(std::move(r));
  }

  // ---- 8. Hirsch formula ----
  {
    CriterionResult r;
    r.id = 8;
    r.name = "Hirsch formula: projective spaces, Euler counts, top degree";
    for (int n = 1; n <= 8; ++n) {
      // CP^n = SU(n+1)/S(U(n) x U(1))
      SymmetricPair p;
      p.name = "CP^" + std::to_string(n);
      p.u = {Series::A, n};
      if (n > 1) p.k_factors = {{Series::A, n - 1}};
      p.k_torus = 1;
      p.hermitian = true;
      Poly P = poincare_polynomial(p);
      Poly want(2 * n + 1, 0);
      for (int i = 0; i <= n; ++i) want[2 * i] = 1;
      ++r.items_checked;
      if (P != want) r.failures.push_back("CP^" + std::to_string(n) + " Poincare polynomial");
    }
    for (auto& rec : Catalog::builtin().forms()) {
      if (!rec.equal_rank() || rec.complex_type.rank > opt.max_rank) continue;
      SymmetricPair p = to_symmetric_pair(rec);
      Poly P = poincare_polynomial(p);
      std::int64_t at1 = 0;
      for (auto c : P) at1 += c;
      ++r.items_checked;
      if (at1 != euler_characteristic(p))
        r.failures.push_back(rec.name + ": P(1) != |W_U|/|W_K|");
      // Palindromic coefficients.
      for (std::size_t i = 0; i < P.size(); ++i)
        if (P[i] != P[P.size() - 1 - i]) {
          r.failures.push_back(rec.name + ": Poincare polynomial not palindromic");
          break;
        }
      if (!rec.marking.empty()) {
        RootSystem rs = RootSystem::build(rec.complex_type);
        HodgeDatum hd = from_marking(rs, rec.marking);
        int horiz = 0;
        for (int i = 0; i < rs.num_positive(); ++i)
          if (hd.degree[i] != 0) ++horiz;
        // K/V is a point for symmetric-pair markings only in the Hermitian
        // case; for the flag variety U/V the top degree is 2|Delta_+ \ <Phi>|.
        std::vector<int> rdeg;
        {
          std::vector<int> levi;
          for (int i = 0; i < rs.num_roots(); ++i)
            if (hd.degree[i] == 0) levi.push_back(i);
          SubsystemType lt = classify_subsystem(rs, levi);
          for (auto& f : lt.factors) {
            auto wd = invariant_degrees(f.series, f.rank);
            rdeg.insert(rdeg.end(), wd.cohomological_degrees.begin(),
                        wd.cohomological_degrees.end());
          }
          for (int i = 0; i < lt.torus; ++i) rdeg.push_back(2);
        }
        Poly flag = hirsch_polynomial(u_degrees(p), rdeg);
        ++r.items_checked;
        if (int(flag.size()) - 1 != 2 * horiz)
          r.failures.push_back(rec.name + ": top degree != 2#(Delta+ minus <Phi>)");
      }
    }
    add(std::move(r));
  }

  // ---- 9. Low-degree Betti table ----
  {
    CriterionResult r;
    r.id = 9;
    r.name = "h^2/h^4 against the classification branches";
    for (auto& rec : Catalog::builtin().forms()) {
      if (rec.complex_type.rank > opt.max_rank) continue;
      SymmetricPair p = to_symmetric_pair(rec);
      if (p.dim_u() <= 3) continue;
      auto [h2, h4] = low_betti(p);
      auto [b2, b4] = low_betti_branch(p);
      ++r.items_checked;
      if (p.equal_rank()) {
        // Internal soundness first: the Hirsch values must match the
        // invariant-theory dimension count h2 = z, h4 = #factors + z(z+1)/2 - 1.
        int z = p.k_torus;
        int want_h2 = z;
        int want_h4 = int(p.k_factors.size()) + z * (z + 1) / 2 - 1;
        if (h2 != want_h2 || h4 != want_h4)
          r.failures.push_back(rec.name + ": internal inconsistency, Hirsch (" +
                               std::to_string(h2) + "," + std::to_string(h4) +
                               ") vs invariant count (" + std::to_string(want_h2) + "," +
                               std::to_string(want_h4) + ")");
      }
      if (h2 != b2)
        r.failures.push_back(rec.name + ": branch-table mismatch, h2 = " + std::to_string(h2) +
                             " but the branch says " + std::to_string(b2));
      if (h4 != b4)
        r.failures.push_back(rec.name + ": branch-table mismatch, h4 = " + std::to_string(h4) +
                             " but the branch says " + std::to_string(b4) + " (K factors: " +
                             std::to_string(p.k_factors.size()) + ", torus: " +
                             std::to_string(p.k_torus) + ")");
    }
    add(std::move(r));
  }

  // ---- 10. p1(F) nonvanishing ----
  {
    CriterionResult r;
    r.id = 10;
    r.name = "p1(F) class nonzero in H^4(U/K) for equal-rank pairs";
    for (auto& rec : Catalog::builtin().forms()) {
      if (!rec.equal_rank() || rec.marking.empty() || rec.complex_type.rank > opt.max_rank)
        continue;
      SymmetricPair p = to_symmetric_pair(rec);
      if (p.dim_u() <= 3) continue;
      PontryaginResult pr = pontryagin_nonvanishing(p);
      ++r.items_checked;
      // Independent cross-check: the class lives in H^4, whose dimension the
      // Hirsch expansion computes; an empty H^4 forces vanishing.
      auto [h2, h4] = low_betti(p);
      (void)h2;
      if (h4 == 0 && pr.nonvanishing)
        r.failures.push_back(rec.name + ": claims nonvanishing inside H^4 = 0");
      if (!pr.nonvanishing) {
        std::string qk, qu;
        for (auto& v : pr.q_k) qk += v.str() + " ";
        for (auto& v : pr.q_u) qu += v.str() + " ";
        r.failures.push_back(rec.name + ": p1(F) vanishes (" + pr.detail + "); q_k = [" + qk +
                             "], q_U = [" + qu + "], h^4 = " + std::to_string(h4));
      }
    }
    add(std::move(r));
  }

  // ---- 11. Classification gates ----
  {
    CriterionResult r;
    r.id = 11;
    r.name = "lattice verdicts and the Matsushima gates";
    if (matsushima_bound(20) != Rational(4)) r.failures.push_back("matsushima_bound(20) != 4");
    if (matsushima_bound(12) != Rational(2)) r.failures.push_back("matsushima_bound(12) != 2");
    for (auto& rec : Catalog::builtin().forms()) {
      LatticeVerdict v = lattice_verdict(rec);
      ++r.items_checked;
      bool expected_excluded = false;
      if (rec.real_rank >= 20 && is_hodge_type(rec) && !is_hermitian(rec))
        expected_excluded = true;
      if ((v == LatticeVerdict::NotKahlerLattice) != expected_excluded)
        r.failures.push_back(rec.name + ": verdict " + to_string(v));
      if (v == LatticeVerdict::NotKahlerLattice) {
        // The excluded set at rank >= 20 is exactly SO(2p,q) (p != 1),
        // Sp(p,q), and Hodge-non-Hermitian exceptional forms.
        bool in_families = rec.family == "Sp(p,q)" || rec.family == "exceptional" ||
                           (rec.family == "SO(p,q)" && !is_hermitian(rec));
        if (!in_families)
          r.failures.push_back(rec.name + ": excluded but outside the expected families");
      }
      // b2/b4 gates against the compact dual, where computable.
      if (is_hodge_type(rec) && !is_hermitian(rec) && !rec.marking.empty() &&
          rec.complex_type.rank <= opt.max_rank) {
        SymmetricPair p = to_symmetric_pair(rec);
        if (p.dim_u() > 3) {
          auto [h2, h4] = low_betti(p);
          if (h2 != 0)
            r.failures.push_back(rec.name + ": Hodge non-Hermitian with h2 != 0");
          // The b4 gate wants h4 = 1; the honest value is #factors+z(z+1)/2-1,
          // which the catalog forms of real rank >= 12 do satisfy. Report
          // catalog-wide exceptions as data rather than hiding them.
          if (h4 != 1 && rec.real_rank >= 12)
            r.failures.push_back(rec.name + ": rank >= 12 with h4 = " + std::to_string(h4));
        }
      }
    }
    const RealFormRecord& sp31 = Catalog::builtin().find("Sp(3,1)");
    if (lattice_verdict(sp31) != LatticeVerdict::BelowThreshold)
      r.failures.push_back("Sp(3,1) verdict is not BelowThreshold");
    const RealFormRecord& sp2525 = Catalog::builtin().find("Sp(25,25)");
    if (lattice_verdict(sp2525) != LatticeVerdict::NotKahlerLattice)
      r.failures.push_back("Sp(25,25) verdict is not NotKahlerLattice");
    add(std::move(r));
  }

  // ---- 12. Determinism of seeded sweeps ----
  // Byte-identity of the emitted JSON across thread counts is exercised at
  // the CLI level; here the seeded pipeline itself is re-run and compared.
  {
    CriterionResult r;
    r.id = 12;
    r.name = "determinism: fixed seed gives identical reports";
    const WeylBasis& wb = cache.get(parse_type("A3"));
    HodgeDatum hd = from_marking(wb.roots(), {0, 1, 0});
    auto serialize = [&] {
      std::string s;
      for (auto& [xi, eta] : commuting_pairs(hd, wb, PairStrategy::random_support, opt.seed, 64))
        s += xi_eval_commuting(wb, hd, xi, eta).str() + ";";
      return s;
    };
    std::string a = serialize(), b = serialize();
    r.items_checked = 2;
    if (a != b) r.failures.push_back("seeded sweep differs across runs");
    add(std::move(r));
  }

  return results;
}

}  // namespace perioddomain
