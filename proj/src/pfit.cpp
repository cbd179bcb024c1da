#include "dnmod/pfit.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "dnmod/error.hpp"

namespace dnmod {

namespace {

struct LinearSolution {
  std::size_t rank = 0;
  bool consistent = true;
  /// Particular solution with free unknowns set to zero.
  std::vector<Rat> x;
};

// Fraction-free (Bareiss) row echelon reduction of an augmented rational
// system; each row is scaled to integers first.
LinearSolution solve_fraction_free(const std::vector<std::vector<Rat>>& rows, std::size_t unknowns) {
  const std::size_t m = rows.size();
  const std::size_t w = unknowns + 1;
  std::vector<std::vector<Int>> a(m, std::vector<Int>(w));
  for (std::size_t i = 0; i < m; ++i) {
    Int l = 1;
    for (const auto& v : rows[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.raw().get_den_mpz_t());
    for (std::size_t j = 0; j < w; ++j) a[i][j] = rows[i][j].num() * (l / rows[i][j].den());
  }

  std::vector<std::size_t> pivot_cols;
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < w; ++j) {
        Int v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivot_cols.push_back(c);
    ++r;
  }

  LinearSolution sol;
  sol.rank = r;
  for (std::size_t i = r; i < m; ++i)
    if (a[i][unknowns] != 0) sol.consistent = false;
  sol.x.assign(unknowns, Rat(0));
  if (!sol.consistent) return sol;
  for (std::size_t k = r; k-- > 0;) {
    const std::size_t c = pivot_cols[k];
    Rat acc(a[k][unknowns]);
    for (std::size_t j = c + 1; j < unknowns; ++j)
      if (a[k][j] != 0) acc -= Rat(a[k][j]) * sol.x[j];
    sol.x[c] = acc / Rat(a[k][c]);
  }
  return sol;
}

Rat power_of(long base, unsigned e) {
  Rat r(1);
  for (unsigned i = 0; i < e; ++i) r *= Rat(base);
  return r;
}

}  // namespace

FitReport fit_d3_report(const RatSeries& phi) {
  const std::size_t prec = phi.prec();
  if (prec == 0 || phi[0] != Rat(1))
    throw Error(Errc::InvalidArgument, "fit_d3 needs a series with constant term 1");

  for (long K = 0; K <= kFitMaxTdeg; ++K) {
    const auto unknowns = static_cast<std::size_t>(4 * K);
    // Row n: sum_{k,j} c_{kj} (n-k)^j phi_{n-k} = -n^3 phi_n.
    std::vector<std::vector<Rat>> rows;
    for (std::size_t n = 1; n < prec; ++n) {
      std::vector<Rat> row(unknowns + 1);
      for (std::size_t k = 1; k <= static_cast<std::size_t>(K) && k <= n; ++k) {
        const Rat& ph = phi[n - k];
        if (ph.is_zero()) continue;
        const long m = static_cast<long>(n - k);
        for (unsigned j = 0; j < 4; ++j) row[(k - 1) * 4 + j] = power_of(m, j) * ph;
      }
      row[unknowns] = -power_of(static_cast<long>(n), 3) * phi[n];
      rows.push_back(std::move(row));
    }

    const LinearSolution sol = solve_fraction_free(rows, unknowns);
    if (!sol.consistent) continue;
    if (sol.rank < unknowns)
      throw Error(Errc::UnderdeterminedFit, "t-degree " + std::to_string(K) + ": rank " + std::to_string(sol.rank) +
                                                " < " + std::to_string(unknowns));
    if (rows.size() < unknowns + kFitSurplus)
      throw Error(Errc::UnderdeterminedFit, "t-degree " + std::to_string(K) + ": " + std::to_string(rows.size()) +
                                                " equations leave fewer than " + std::to_string(kFitSurplus) +
                                                " surplus checks");

    WeylOp::Terms terms;
    terms.emplace(0, pow(RatPoly::x(), 3));
    for (std::size_t k = 1; k <= static_cast<std::size_t>(K); ++k) {
      std::vector<Rat> p(sol.x.begin() + static_cast<long>((k - 1) * 4), sol.x.begin() + static_cast<long>(k * 4));
      terms.emplace(static_cast<long>(k), RatPoly(std::move(p)));
    }
    return FitReport{WeylOp(std::move(terms)), K, unknowns, rows.size(), sol.rank};
  }
  throw Error(Errc::NoD3Annihilator, "no consistent system up to t-degree 4 at precision " + std::to_string(prec));
}

WeylOp fit_d3(const RatSeries& phi) { return fit_d3_report(phi).op; }

Extraction try_extract_matrix(const WeylOp& op) {
  Extraction out;
  const RatPoly D = RatPoly::x();
  // Anything outside t^0..t^4 with deg <= 3 and p_0 = D^3 is residual.
  WeylOp outside;
  for (const auto& [k, p] : op.terms()) {
    if (k < 0 || k > 4 || p.degree() > 3) outside += WeylOp::term(k, p);
  }
  if (op.coeff(0) != pow(D, 3)) outside += WeylOp::term(0, op.coeff(0) - pow(D, 3));
  if (!outside.is_zero()) {
    out.residual = outside;
    return out;
  }
  auto lin = [](long c, long s) { return RatPoly::linear(Rat(c), Rat(s)); };

  // Stage 1: p1 = -(2D+1)((a00+a11) D^2 + (a00+a11) D + a00).
  const RatPoly q1 = RatPoly::divmod(-op.coeff(1), lin(1, 2)).first;
  const Rat a00 = q1[0];
  const Rat a11 = q1[2] - a00;
  // Stage 2: p2 = (D+1)(q2 D^2 + q1' D + q0); the D^0 slot gives a01, D^2 gives a12.
  const RatPoly r2 = RatPoly::divmod(op.coeff(2), lin(1, 1)).first;
  const Rat a01 = (Rat(6) * a11 * a00 + a00 * a00 - r2[0]) / Rat(4);
  const Rat a12 = a11 * a11 + a00 * a00 + Rat(4) * a11 * a00 - Rat(2) * a01 - r2[2];
  // Stage 3: p3 = -(2D+3)(D+2)(D+1) X.
  const RatPoly r3 = RatPoly::divmod(-op.coeff(3), lin(3, 2) * lin(2, 1) * lin(1, 1)).first;
  const Rat a02 = r3[0] - (a00 * a00 * a11 + a11 * a11 * a00 - a12 * a00 - a11 * a01 - a01 * a00);
  // Stage 4: p4 = (D+3)(D+2)(D+1) Y.
  const RatPoly r4 = RatPoly::divmod(op.coeff(4), lin(3, 1) * lin(2, 1) * lin(1, 1)).first;
  const Rat a03 = -r4[0] - a00 * a00 * a12 + Rat(2) * a02 * a00 + a00 * a00 * a11 * a11 + a01 * a01 -
                  Rat(2) * a01 * a11 * a00;

  DNMatrix m = DNMatrix::d3(a00, a01, a02, a03, a11, a12);
  // Every slot not used above (remainders, the D^1 slot of stage 2, higher
  // quotient terms) shows up here.
  out.residual = op - d3_expand(m);
  out.matrix = std::move(m);
  return out;
}

DNMatrix extract_matrix(const WeylOp& op) {
  Extraction e = try_extract_matrix(op);
  if (!e.ok()) throw Error(Errc::NotD3Shaped, "residual " + e.residual.str());
  return *e.matrix;
}

Recovery recover(const ModularCase& mc, std::size_t prec) {
  Recovery r;
  r.phi_t = phi_in_t(mc, prec);
  r.op = fit_d3(r.phi_t);
  r.matrix = extract_matrix(r.op);
  return r;
}

// ---------------------------------------------------------------- auto c0

namespace {

// Fraction-free determinant over Q[delta] (an integral domain).
RatPoly poly_det(std::vector<std::vector<RatPoly>> a) {
  const std::size_t n = a.size();
  RatPoly prev(Rat(1));
  Rat sign(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k].is_zero()) ++p;
    if (p == n) return {};
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto [q, r] = RatPoly::divmod(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
        if (!r.is_zero()) throw Error(Errc::InvalidArgument, "inexact Bareiss division");
        a[i][j] = std::move(q);
      }
      a[i][k] = RatPoly();
    }
    prev = a[k][k];
  }
  return a[n - 1][n - 1] * sign;
}

Rat binom_rat(const Rat& alpha, unsigned k) {
  Rat r(1);
  for (unsigned i = 0; i < k; ++i) r = r * (alpha - Rat(static_cast<long>(i))) / Rat(static_cast<long>(i + 1));
  return r;
}

// Rational roots of a nonzero polynomial: exact for degree <= 2, otherwise
// numeric roots snapped to nearby rationals and verified exactly.
std::vector<Rat> rational_roots(const RatPoly& f) {
  std::vector<Rat> out;
  auto add = [&](const Rat& r) {
    if (f.eval(r).is_zero() && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  };
  for (const auto& [m, g] : squarefree_decomposition(f)) {
    if (g.degree() == 1) {
      add(-g[0] / g[1]);
    } else if (g.degree() == 2) {
      const Rat disc = g[1] * g[1] - Rat(4) * g[0] * g[2];
      if (disc.sign() < 0) continue;
      Int n = disc.num(), d = disc.den();
      if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) continue;
      mpz_sqrt(n.get_mpz_t(), n.get_mpz_t());
      mpz_sqrt(d.get_mpz_t(), d.get_mpz_t());
      const Rat s(n, d);
      add((-g[1] + s) / (Rat(2) * g[2]));
      add((-g[1] - s) / (Rat(2) * g[2]));
    } else {
      // Durand-Kerner on the monic squarefree factor.
      using C = std::complex<long double>;
      const long deg = g.degree();
      std::vector<long double> c(static_cast<std::size_t>(deg + 1));
      for (long i = 0; i <= deg; ++i) c[static_cast<std::size_t>(i)] = static_cast<long double>(g[static_cast<std::size_t>(i)].to_double());
      std::vector<C> z(static_cast<std::size_t>(deg));
      for (long i = 0; i < deg; ++i) z[static_cast<std::size_t>(i)] = std::pow(C(0.4L, 0.9L), static_cast<long double>(i));
      auto eval = [&](C x) {
        C acc = 0;
        for (long i = deg; i >= 0; --i) acc = acc * x + c[static_cast<std::size_t>(i)];
        return acc;
      };
      for (int it = 0; it < 2000; ++it) {
        for (std::size_t i = 0; i < z.size(); ++i) {
          C den = 1;
          for (std::size_t j = 0; j < z.size(); ++j)
            if (j != i) den *= (z[i] - z[j]);
          z[i] -= eval(z[i]) / den;
        }
      }
      for (const auto& root : z) {
        if (std::abs(root.imag()) > 1e-6L * (1 + std::abs(root.real()))) continue;
        // Continued-fraction convergents of the real part.
        long double x = root.real();
        Int h0 = 0, h1 = 1, k0 = 1, k1 = 0;
        for (int step = 0; step < 40; ++step) {
          const long double fl = std::floor(x);
          const Int a(static_cast<long>(fl));
          Int h2 = a * h1 + h0, k2 = a * k1 + k0;
          h0 = h1; h1 = h2; k0 = k1; k1 = k2;
          add(Rat(h1, k1));
          const long double frac = x - fl;
          if (frac < 1e-15L) break;
          x = 1 / frac;
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

AutoC0Result auto_c0(const ModularCase& mc, std::size_t prec, std::size_t verify_prec) {
  AutoC0Result res;
  const unsigned d = mc.index;
  res.reference_c0 = uniformizer_inv_raw(mc.uniformizer.recipe, 2).body()[1];
  ModularCase ref = mc;
  ref.uniformizer.c0 = res.reference_c0;
  const RatSeries phi = phi_in_t(ref, prec);
  prec = std::min(prec, phi.prec());

  // Coefficients of Phi(t (1 - delta t^d)^{-1/d}) as polynomials in delta.
  std::vector<RatPoly> coef(prec);
  for (std::size_t m = 0; m < prec; ++m) {
    RatPoly acc;
    for (std::size_t n = m % d; n <= m; n += d) {
      if (phi[n].is_zero()) continue;
      const auto k = static_cast<unsigned>((m - n) / d);
      const Rat alpha = -Rat(static_cast<long>(n), static_cast<long>(d));
      const Rat c = phi[n] * binom_rat(alpha, k) * ((k % 2) ? Rat(-1) : Rat(1));
      acc += RatPoly::monomial(c, k);
    }
    coef[m] = acc;
  }

  // D3 shape, linear in (alpha, s, beta, eps, X, Y):
  //   p1(m) = -(2m+1)(s(m^2+m) + alpha),  p2(m) = (m+1)(beta((m+1)^2-1) + eps),
  //   p3(m) = -(2m+3)(m+2)(m+1) X,        p4(m) = (m+3)(m+2)(m+1) Y.
  constexpr std::size_t kUnknowns = 6;
  std::vector<std::vector<RatPoly>> rows;
  for (std::size_t n = 1; n < prec; ++n) {
    std::vector<RatPoly> row(kUnknowns + 1);
    for (std::size_t k = 1; k <= 4 && k <= n; ++k) {
      const RatPoly& ph = coef[n - k];
      if (ph.is_zero()) continue;
      const Rat m(static_cast<long>(n - k));
      switch (k) {
        case 1:
          row[0] += ph * (-(Rat(2) * m + Rat(1)));
          row[1] += ph * (-(Rat(2) * m + Rat(1)) * (m * m + m));
          break;
        case 2:
          row[2] += ph * ((m + Rat(1)) * ((m + Rat(1)) * (m + Rat(1)) - Rat(1)));
          row[3] += ph * (m + Rat(1));
          break;
        case 3:
          row[4] += ph * (-(Rat(2) * m + Rat(3)) * (m + Rat(2)) * (m + Rat(1)));
          break;
        default:
          row[5] += ph * ((m + Rat(3)) * (m + Rat(2)) * (m + Rat(1)));
          break;
      }
    }
    const Rat n3 = Rat(static_cast<long>(n * n * n));
    row[kUnknowns] = coef[n] * (-n3);
    rows.push_back(std::move(row));
  }

  // Pick independent rows at a generic parameter value.
  const Rat probe(7919, 1013);
  std::vector<std::size_t> pivots;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t i = 0; i < rows.size() && pivots.size() < kUnknowns; ++i) {
    std::vector<Rat> v(kUnknowns);
    for (std::size_t j = 0; j < kUnknowns; ++j) v[j] = rows[i][j].eval(probe);
    for (const auto& b : basis) {
      std::size_t lead = 0;
      while (b[lead].is_zero()) ++lead;
      if (v[lead].is_zero()) continue;
      const Rat f = v[lead] / b[lead];
      for (std::size_t j = 0; j < kUnknowns; ++j) v[j] -= f * b[j];
    }
    if (std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); })) continue;
    // Keep the basis in echelon form by leading index.
    basis.push_back(v);
    std::sort(basis.begin(), basis.end(), [](const auto& x, const auto& y) {
      auto lx = std::find_if(x.begin(), x.end(), [](const Rat& r) { return !r.is_zero(); }) - x.begin();
      auto ly = std::find_if(y.begin(), y.end(), [](const Rat& r) { return !r.is_zero(); }) - y.begin();
      return lx < ly;
    });
    pivots.push_back(i);
  }
  if (pivots.size() < kUnknowns) {
    res.degenerate = true;
    return res;
  }

  RatPoly g;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (std::find(pivots.begin(), pivots.end(), i) != pivots.end()) continue;
    std::vector<std::vector<RatPoly>> m;
    for (auto p : pivots) m.push_back(rows[p]);
    m.push_back(rows[i]);
    const RatPoly det = poly_det(std::move(m));
    if (!det.is_zero()) g = gcd(g, det);
  }
  if (g.is_zero()) {
    res.degenerate = true;
    return res;
  }
  res.consistency = g;
  for (const auto& delta : rational_roots(g)) {
    const Rat c0 = res.reference_c0 + delta;
    res.candidates.push_back(c0);
    ModularCase trial = mc;
    trial.uniformizer.c0 = c0;
    try {
      recover(trial, verify_prec);
      res.verified.push_back(c0);
    } catch (const Error&) {
    }
  }
  return res;
}

}  // namespace dnmod
