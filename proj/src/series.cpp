#include "dnmod/series.hpp"

#include <algorithm>
#include <string>

#include "dnmod/error.hpp"

namespace dnmod {

RatSeries RatSeries::constant(const Rat& c, std::size_t prec) {
  RatSeries s = zero(prec);
  if (prec > 0) s.c_[0] = c;
  return s;
}

RatSeries RatSeries::variable(std::size_t prec) {
  RatSeries s = zero(prec);
  if (prec > 1) s.c_[1] = Rat(1);
  return s;
}

RatSeries RatSeries::from_poly(std::span<const Rat> coeffs, std::size_t prec) {
  RatSeries s = zero(prec);
  for (std::size_t i = 0; i < std::min(prec, coeffs.size()); ++i) s.c_[i] = coeffs[i];
  return s;
}

std::size_t RatSeries::valuation() const noexcept {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return i;
  return c_.size();
}

RatSeries RatSeries::truncated(std::size_t prec) const {
  RatSeries s = *this;
  s.c_.resize(std::min(prec, c_.size()));
  return s;
}

RatSeries RatSeries::shifted_up(std::size_t k) const {
  std::vector<Rat> v(k);
  v.insert(v.end(), c_.begin(), c_.end());
  return RatSeries(std::move(v));
}

RatSeries RatSeries::shifted_down(std::size_t k) const {
  if (valuation() < k) throw Error(Errc::InvalidArgument, "shifted_down past a nonzero coefficient");
  if (k >= c_.size()) return {};
  return RatSeries(std::vector<Rat>(c_.begin() + static_cast<long>(k), c_.end()));
}

RatSeries RatSeries::substitute_power(std::size_t k) const {
  if (k == 0) throw Error(Errc::InvalidArgument, "substitute_power needs k >= 1");
  if (c_.empty()) return {};
  // f known mod x^P gives f(x^k) known mod x^{kP}.
  RatSeries s = zero(k * c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i * k] = c_[i];
  return s;
}

RatSeries RatSeries::scaled_arg(const Rat& s) const {
  RatSeries out = *this;
  Rat f(1);
  for (auto& c : out.c_) {
    c *= f;
    f *= s;
  }
  return out;
}

RatSeries RatSeries::derivative() const {
  if (c_.empty()) return {};
  std::vector<Rat> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return RatSeries(std::move(v));
}

RatSeries& RatSeries::operator+=(const RatSeries& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

RatSeries& RatSeries::operator-=(const RatSeries& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

RatSeries& RatSeries::operator*=(const Rat& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

RatSeries operator*(const RatSeries& a, const RatSeries& b) {
  const std::size_t n = std::min(a.prec(), b.prec());
  std::vector<Rat> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b.c_[j].is_zero()) continue;
      v[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return RatSeries(std::move(v));
}

RatSeries mul(const RatSeries& a, const RatSeries& b) { return a * b; }
RatSeries add(const RatSeries& a, const RatSeries& b) { return a + b; }
RatSeries sub(const RatSeries& a, const RatSeries& b) { return a - b; }

namespace {

// a / b with b(0) != 0, result precision min(prec a, prec b).
RatSeries unit_div(const RatSeries& a, const RatSeries& b) {
  const std::size_t n = std::min(a.prec(), b.prec());
  std::vector<Rat> q(n);
  const Rat inv = Rat(1) / b[0];
  for (std::size_t k = 0; k < n; ++k) {
    Rat acc = a[k];
    for (std::size_t j = 1; j <= k; ++j)
      if (!b[j].is_zero()) acc -= b[j] * q[k - j];
    q[k] = acc * inv;
  }
  return RatSeries(std::move(q));
}

}  // namespace

RatSeries div(const RatSeries& a, const RatSeries& b) {
  const std::size_t vb = b.valuation();
  if (vb == b.prec()) throw Error(Errc::DivisionByZero, "divisor is zero to its precision");
  const std::size_t va = a.valuation();
  if (va < vb)
    throw Error(Errc::DivisionByHigherValuation,
                "valuation " + std::to_string(vb) + " > " + std::to_string(va));
  return unit_div(a.shifted_down(vb), b.shifted_down(vb));
}

RatSeries inverse(const RatSeries& f) { return div(RatSeries::constant(Rat(1), f.prec()), f); }

RatSeries compose(const RatSeries& f, const RatSeries& g) {
  if (g.prec() == 0 || f.prec() == 0) return {};
  if (!g[0].is_zero())
    throw Error(Errc::CompositionNeedsPositiveValuation, "inner series has nonzero constant term");
  const std::size_t v = g.valuation();
  // Terms f_n g^n with n >= prec(f) start at x^{v prec(f)}.
  const std::size_t prec = (v >= g.prec()) ? g.prec() : std::min(g.prec(), v * f.prec());
  if (v >= g.prec()) return RatSeries::constant(f[0], prec);
  const std::size_t nterms = std::min(f.prec(), (prec + v - 1) / v);
  const RatSeries gt = g.truncated(prec);
  RatSeries acc = RatSeries::constant(f[nterms - 1], prec);
  for (std::size_t i = nterms - 1; i-- > 0;) {
    acc = acc * gt;
    acc[0] += f[i];
  }
  return acc;
}

RatSeries compose_polynomial(std::span<const Rat> f, const RatSeries& g) {
  const std::size_t prec = g.prec();
  RatSeries acc = RatSeries::zero(prec);
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = acc * g;
    if (prec > 0) acc[0] += f[i];
  }
  return acc;
}

RatSeries reversion(const RatSeries& f) {
  const std::size_t prec = f.prec();
  if (prec < 2 || !f[0].is_zero() || f[1].is_zero())
    throw Error(Errc::NotReversible, "need f = c1 x + O(x^2) with c1 != 0");
  // Newton iteration g <- g - (f(g) - x) / f'(g), doubling the precision.
  // The derivative loses one term; the residual has valuation >= 2, so a zero pad is exact.
  std::vector<Rat> dcoeffs = f.derivative().coeffs();
  dcoeffs.resize(prec);
  const RatSeries fp(std::move(dcoeffs));
  RatSeries g = RatSeries::zero(2);
  g[1] = Rat(1) / f[1];
  std::size_t n = 2;
  while (n < prec) {
    n = std::min(prec, 2 * n);
    std::vector<Rat> padded = g.coeffs();
    padded.resize(n);
    const RatSeries gn(std::move(padded));
    RatSeries residual = compose(f.truncated(n), gn) - RatSeries::variable(n);
    RatSeries slope = compose(fp.truncated(n), gn);
    g = gn - unit_div(residual, slope);
  }
  return g.truncated(prec);
}

RatSeries pow(const RatSeries& f, const Rat& e) {
  const std::size_t n = f.prec();
  if (n == 0) return {};
  if (e.is_integer() && e.sign() >= 0) {
    auto k = e.num();
    RatSeries result = RatSeries::constant(Rat(1), n);
    RatSeries base = f;
    while (k > 0) {
      if (mpz_odd_p(k.get_mpz_t())) result = result * base;
      k >>= 1;
      if (k > 0) base = base * base;
    }
    return result;
  }
  if (f[0] != Rat(1))
    throw Error(Errc::RootNeedsUnitConstantTerm, "constant term is " + f[0].str());
  // f g' = e f' g gives k g_k = sum_{j=1..k} ((e+1) j - k) f_j g_{k-j}.
  std::vector<Rat> g(n);
  g[0] = Rat(1);
  const Rat e1 = e + Rat(1);
  for (std::size_t k = 1; k < n; ++k) {
    Rat acc;
    for (std::size_t j = 1; j <= k; ++j) {
      if (f[j].is_zero()) continue;
      acc += (e1 * Rat(static_cast<long>(j)) - Rat(static_cast<long>(k))) * f[j] * g[k - j];
    }
    g[k] = acc / Rat(static_cast<long>(k));
  }
  return RatSeries(std::move(g));
}

RatSeries nth_root(const RatSeries& f, unsigned n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "nth_root needs n >= 1");
  if (f.prec() > 0 && f[0] != Rat(1))
    throw Error(Errc::RootNeedsUnitConstantTerm, "constant term is " + f[0].str());
  return pow(f, Rat(1, static_cast<long>(n)));
}

FracSeries::FracSeries(Rat offset, RatSeries body) : offset_(std::move(offset)), body_(std::move(body)) {
  const std::size_t v = body_.valuation();
  if (v > 0 && v < body_.prec()) {
    body_ = body_.shifted_down(v);
    offset_ += Rat(static_cast<long>(v));
  }
}

FracSeries FracSeries::root_substitute(std::size_t k) const {
  if (k == 0) throw Error(Errc::InvalidArgument, "root_substitute needs k >= 1");
  const std::size_t n = (body_.prec() + k - 1) / k;
  std::vector<Rat> v(n);
  for (std::size_t i = 0; i < body_.prec(); ++i) {
    if (i % k == 0) {
      v[i / k] = body_[i];
    } else if (!body_[i].is_zero()) {
      throw Error(Errc::InvalidArgument,
                  "body has a nonzero coefficient at x^" + std::to_string(i) + ", not divisible by " +
                      std::to_string(k));
    }
  }
  return FracSeries(offset_ / Rat(static_cast<long>(k)), RatSeries(std::move(v)));
}

FracSeries frac_mul(const FracSeries& a, const FracSeries& b) {
  return FracSeries(a.offset() + b.offset(), a.body() * b.body());
}

FracSeries frac_pow(const FracSeries& a, const Rat& e) {
  return FracSeries(a.offset() * e, pow(a.body(), e));
}

}  // namespace dnmod
