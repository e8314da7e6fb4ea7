#include "perioddomain/chevalley.hpp"
#include "perioddomain/hodge.hpp"

namespace perioddomain {

namespace {
std::string root_name(const RootSystem& rs, int i) {
  std::string s = "(";
  for (int t = 0; t < rs.rank(); ++t) s += (t ? "," : "") + std::to_string(rs.root(i)[t]);
  return s + ")";
}
}  // namespace

WeylPropertyReport verify_weyl_properties(const WeylBasis& wb, const HodgeDatum& hd) {
  const RootSystem& rs = wb.roots();
  int m = rs.num_roots();
  WeylPropertyReport rep;

  auto run = [&](const std::string& name, auto&& body) {
    ClauseResult c;
    c.clause = name;
    body(c);
    rep.clauses.push_back(std::move(c));
  };
  auto fail = [&](ClauseResult& c, const std::string& msg) {
    if (c.passed) c.first_failure = msg;
    c.passed = false;
  };

  run("(a) kappa(e_a,e_b) = delta_{a,-b} and [e_a,e_-a] = h_a", [&](ClauseResult& c) {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        Scalar k = killing(LieElement::root_vector(wb, i), LieElement::root_vector(wb, j));
        Scalar want = (j == rs.negative(i)) ? Scalar(1) : Scalar();
        ++c.checked;
        if (k != want) fail(c, "kappa at " + root_name(rs, i) + "," + root_name(rs, j));
      }
      LieElement br = bracket(LieElement::root_vector(wb, i),
                              LieElement::root_vector(wb, rs.negative(i)));
      ++c.checked;
      if (!(br == LieElement::coroot(wb, i))) fail(c, "[e,e^-] at " + root_name(rs, i));
    }
  });

  run("(b) (h_a, h_b) = <a,b>", [&](ClauseResult& c) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Scalar k = killing(LieElement::coroot(wb, i), LieElement::coroot(wb, j));
        ++c.checked;
        if (k != Scalar(rs.inner(i, j)))
          fail(c, "pairing at " + root_name(rs, i) + "," + root_name(rs, j));
      }
  });

  run("(c) [e_a,e_b] = 0 when a+b not a root", [&](ClauseResult& c) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (rs.sum(i, j) != -1) continue;
        ++c.checked;
        if (!bracket(LieElement::root_vector(wb, i), LieElement::root_vector(wb, j)).is_zero())
          fail(c, "nonzero bracket at " + root_name(rs, i) + "," + root_name(rs, j));
      }
  });

  run("(d) N real, N_{-a,-b} = -N_{a,b}", [&](ClauseResult& c) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (rs.sum(i, j) < 0) continue;
        ++c.checked;
        if (!wb.n(i, j).is_real()) fail(c, "complex N at " + root_name(rs, i));
        if (wb.n(rs.negative(i), rs.negative(j)) != -wb.n(i, j))
          fail(c, "negation rule at " + root_name(rs, i) + "," + root_name(rs, j));
      }
  });

  run("(e) tau(e_a) = -e_{-a}, tau an antilinear involution preserving brackets",
      [&](ClauseResult& c) {
        for (int i = 0; i < m; ++i) {
          LieElement e = LieElement::root_vector(wb, i);
          ++c.checked;
          if (!(tau(e) == LieElement::root_vector(wb, rs.negative(i), Scalar(Rational(-1)))))
            fail(c, "tau at " + root_name(rs, i));
          if (!(tau(tau(e)) == e)) fail(c, "tau not involutive at " + root_name(rs, i));
        }
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) {
            LieElement x = LieElement::root_vector(wb, i);
            LieElement y = LieElement::root_vector(wb, j);
            ++c.checked;
            if (!(tau(bracket(x, y)) == bracket(tau(x), tau(y))))
              fail(c, "tau-bracket at " + root_name(rs, i) + "," + root_name(rs, j));
          }
      });

  run("(f) sigma(e_a) = eps_a e_{-a}, sigma an antilinear involution preserving brackets",
      [&](ClauseResult& c) {
        for (int i = 0; i < m; ++i) {
          LieElement e = LieElement::root_vector(wb, i);
          ++c.checked;
          if (!(sigma(e, hd.eps) ==
                LieElement::root_vector(wb, rs.negative(i), Scalar(Rational(hd.eps[i])))))
            fail(c, "sigma at " + root_name(rs, i));
          if (!(sigma(sigma(e, hd.eps), hd.eps) == e))
            fail(c, "sigma not involutive at " + root_name(rs, i));
        }
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) {
            LieElement x = LieElement::root_vector(wb, i);
            LieElement y = LieElement::root_vector(wb, j);
            ++c.checked;
            if (!(sigma(bracket(x, y), hd.eps) == bracket(sigma(x, hd.eps), sigma(y, hd.eps))))
              fail(c, "sigma-bracket at " + root_name(rs, i) + "," + root_name(rs, j));
          }
      });

  run("(g) eps_{a+b} = -eps_a eps_b on summable pairs", [&](ClauseResult& c) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        int s = rs.sum(i, j);
        if (s < 0) continue;
        ++c.checked;
        if (hd.eps[s] != -hd.eps[i] * hd.eps[j])
          fail(c, "eps at " + root_name(rs, i) + "," + root_name(rs, j));
      }
  });

  run("cocycle N_{a,b}N_{c,d} + N_{b,c}N_{a,d} + N_{c,a}N_{b,d} = 0 on zero-sum quadruples",
      [&](ClauseResult& c) {
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b) {
            if (b == rs.negative(a)) continue;
            for (int x = 0; x < m; ++x) {
              // d = -(a+b+x); find it by coordinates.
              RootCoords d = rs.root(a);
              for (int t = 0; t < rs.rank(); ++t)
                d[t] = -(d[t] + rs.root(b)[t] + rs.root(x)[t]);
              int di = rs.index_of(d);
              if (di < 0) continue;
              // no two of which have sum 0
              if (x == rs.negative(a) || x == rs.negative(b) || di == rs.negative(a) ||
                  di == rs.negative(b) || di == rs.negative(x))
                continue;
              Scalar v = wb.n(a, b) * wb.n(x, di) + wb.n(b, x) * wb.n(a, di) +
                         wb.n(x, a) * wb.n(b, di);
              ++c.checked;
              if (!v.is_zero())
                fail(c, "cocycle at " + root_name(rs, a) + root_name(rs, b) + root_name(rs, x) +
                            root_name(rs, di));
            }
          }
      });

  return rep;
}

}  // namespace perioddomain
