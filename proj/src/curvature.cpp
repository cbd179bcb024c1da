#include "dnmod/curvature.hpp"

#include <string>

#include "dnmod/error.hpp"
#include "dnmod/numth.hpp"

namespace dnmod {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

}  // namespace

std::uint64_t fp_inverse(std::uint64_t a, std::uint64_t p) {
  // Fermat; p is prime.
  std::uint64_t r = 1, b = a % p, e = p - 2;
  if (b == 0) throw Error(Errc::DivisionByZero, "inverse of 0 mod " + std::to_string(p));
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t fp_reduce(const Rat& r, std::uint64_t p) {
  const Int pp(std::to_string(p));
  Int n = r.num() % pp;
  if (n < 0) n += pp;
  const Int d = r.den() % pp;
  if (d == 0) throw Error(Errc::BadPrime, std::to_string(p) + " divides the denominator of " + r.str());
  return mulmod(n.get_ui(), fp_inverse(d.get_ui(), p), p);
}

// ---------------------------------------------------------------- FpPoly

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

FpPoly FpPoly::constant(std::uint64_t p, std::uint64_t c) { return FpPoly(p, {c}); }

FpPoly FpPoly::monomial(std::uint64_t p, std::uint64_t c, std::size_t degree) {
  std::vector<std::uint64_t> v(degree + 1, 0);
  v[degree] = c;
  return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::derivative() const {
  if (c_.size() <= 1) return FpPoly(p_, {});
  std::vector<std::uint64_t> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = mulmod(c_[i], i % p_, p_);
  return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::scaled(std::uint64_t s) const {
  std::vector<std::uint64_t> v(c_);
  for (auto& c : v) c = mulmod(c, s, p_);
  return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::monic() const {
  if (c_.empty()) return *this;
  return scaled(fp_inverse(c_.back(), p_));
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  const std::uint64_t p = a.p_ ? a.p_ : b.p_;
  std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = (v[i] + b.c_[i]) % p;
  return FpPoly(p, std::move(v));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  const std::uint64_t p = a.p_ ? a.p_ : b.p_;
  std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = (v[i] + p - b.c_[i]) % p;
  return FpPoly(p, std::move(v));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  const std::uint64_t p = a.p_ ? a.p_ : b.p_;
  if (a.c_.empty() || b.c_.empty()) return FpPoly(p, {});
  std::vector<u128> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += static_cast<u128>(a.c_[i]) * b.c_[j];
  }
  std::vector<std::uint64_t> v(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) v[i] = static_cast<std::uint64_t>(acc[i] % p);
  return FpPoly(p, std::move(v));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "F_p polynomial division by zero");
  const std::uint64_t p = b.p_;
  if (a.degree() < b.degree()) return {FpPoly(p, {}), a};
  std::vector<std::uint64_t> r = a.c_;
  std::vector<std::uint64_t> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  const std::uint64_t inv = fp_inverse(b.leading(), p);
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::uint64_t f = mulmod(r[k + db], inv, p);
    q[k] = f;
    if (!f) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] = (r[k + j] + p - mulmod(f, b.c_[j], p)) % p;
  }
  return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = FpPoly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---------------------------------------------------------------- FpRatFun

FpRatFun::FpRatFun(FpPoly num, FpPoly den) {
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
  const std::uint64_t p = den.modulus();
  if (num.is_zero()) {
    num_ = FpPoly(p, {});
    den_ = FpPoly::constant(p, 1);
    return;
  }
  const FpPoly g = gcd(num, den);
  num = FpPoly::divmod(num, g).first;
  den = FpPoly::divmod(den, g).first;
  const std::uint64_t inv = fp_inverse(den.leading(), p);
  num_ = num.scaled(inv);
  den_ = den.scaled(inv);
}

FpRatFun FpRatFun::zero(std::uint64_t p) { return FpRatFun(FpPoly(p, {}), FpPoly::constant(p, 1)); }

FpRatFun FpRatFun::derivative() const {
  return FpRatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

FpRatFun operator+(const FpRatFun& a, const FpRatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return FpRatFun(a.num_ + b.num_, a.den_);
  return FpRatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

FpRatFun operator*(const FpRatFun& a, const FpRatFun& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  // Cross-cancel first to keep degrees down.
  const FpPoly g1 = gcd(a.num_, b.den_);
  const FpPoly g2 = gcd(b.num_, a.den_);
  const FpPoly n = FpPoly::divmod(a.num_, g1).first * FpPoly::divmod(b.num_, g2).first;
  const FpPoly d = FpPoly::divmod(a.den_, g2).first * FpPoly::divmod(b.den_, g1).first;
  return FpRatFun(n, d);
}

// ---------------------------------------------------------------- FpMatrix

bool FpMatrix::is_zero() const {
  for (const auto& row : rows)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

FpMatrix FpMatrix::derivative() const {
  FpMatrix out{p, rows};
  for (auto& row : out.rows)
    for (auto& e : row) e = e.derivative();
  return out;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  const std::size_t n = a.dim();
  FpMatrix out{a.p, std::vector<std::vector<FpRatFun>>(n, std::vector<FpRatFun>(n, FpRatFun::zero(a.p)))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a.rows[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b.rows[k][j].is_zero()) continue;
        out.rows[i][j] = out.rows[i][j] + a.rows[i][k] * b.rows[k][j];
      }
    }
  return out;
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
  FpMatrix out = a;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out.rows[i][j] = a.rows[i][j] + b.rows[i][j];
  return out;
}

// ---------------------------------------------------------------- p-curvature

FpMatrix companion_matrix(const WeylOp& op, std::uint64_t p) {
  if (!numth::is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  const long n = op.order();
  if (n < 1) throw Error(Errc::InvalidArgument, "companion_matrix needs an operator of order >= 1");
  if (op.min_tdeg() < 0) throw Error(Errc::InvalidArgument, "companion_matrix needs nonnegative t-degrees");

  // L = sum_j c_j(t) D^j with c_j(t) = sum_k [D^j] p_k t^k.
  const auto width = static_cast<std::size_t>(op.max_tdeg() + 1);
  std::vector<FpPoly> c(static_cast<std::size_t>(n + 1));
  std::vector<Rat> lead_exact(width);
  for (long j = 0; j <= n; ++j) {
    std::vector<std::uint64_t> v(width, 0);
    for (const auto& [k, pk] : op.terms()) {
      const Rat coef = pk[static_cast<std::size_t>(j)];
      if (coef.is_zero()) continue;
      v[static_cast<std::size_t>(k)] = fp_reduce(coef, p);
      if (j == n) lead_exact[static_cast<std::size_t>(k)] = coef;
    }
    c[static_cast<std::size_t>(j)] = FpPoly(p, std::move(v));
  }
  const FpPoly& lead = c[static_cast<std::size_t>(n)];
  std::size_t top = width, bottom = width;
  for (std::size_t k = 0; k < width; ++k) {
    if (lead_exact[k].is_zero()) continue;
    if (bottom == width) bottom = k;
    top = k;
  }
  if (lead.is_zero() || static_cast<std::size_t>(lead.degree()) != top)
    throw Error(Errc::BadPrime, std::to_string(p) + " divides the top coefficient " +
                                    lead_exact[top].str() + " of the symbol polynomial");
  if (lead.coeffs()[bottom] == 0)
    throw Error(Errc::BadPrime, std::to_string(p) + " divides the lowest coefficient " +
                                    lead_exact[bottom].str() + " of the symbol polynomial");

  const FpPoly t = FpPoly::monomial(p, 1, 1);
  const FpPoly one = FpPoly::constant(p, 1);
  const auto dim = static_cast<std::size_t>(n);
  FpMatrix m{p, std::vector<std::vector<FpRatFun>>(dim, std::vector<FpRatFun>(dim, FpRatFun::zero(p)))};
  for (std::size_t i = 0; i + 1 < dim; ++i) m.rows[i][i + 1] = FpRatFun(one, t);
  const FpPoly t_lead = t * lead;
  for (std::size_t j = 0; j < dim; ++j) m.rows[dim - 1][j] = FpRatFun(FpPoly(p, {}) - c[j], t_lead);
  return m;
}

FpMatrix p_curvature(const FpMatrix& m, std::uint64_t p) {
  FpMatrix a = m;
  for (std::uint64_t i = 1; i < p; ++i) a = a * m + a.derivative();
  return a;
}

bool is_nilpotent(const FpMatrix& m) {
  if (m.dim() == 0) return true;
  FpMatrix power = m;
  for (std::size_t i = 1; i < m.dim(); ++i) power = power * m;
  return power.is_zero();
}

std::string_view prime_status_name(PrimeStatus s) noexcept {
  switch (s) {
    case PrimeStatus::BadPrime: return "bad";
    case PrimeStatus::Nilpotent: return "nilpotent";
    case PrimeStatus::NotNilpotent: return "not-nilpotent";
  }
  return "unknown";
}

NilpotenceReport nilpotence_report(const WeylOp& op, std::uint64_t lo, std::uint64_t hi) {
  NilpotenceReport rep;
  for (std::uint64_t p = lo; p <= hi; ++p) {
    if (!numth::is_prime(p)) continue;
    try {
      const FpMatrix m = companion_matrix(op, p);
      const bool nil = is_nilpotent(p_curvature(m, p));
      rep.primes[p] = nil ? PrimeStatus::Nilpotent : PrimeStatus::NotNilpotent;
      if (!nil) rep.consistent_with_global_nilpotence = false;
    } catch (const Error& e) {
      if (e.code() != Errc::BadPrime) throw;
      rep.primes[p] = PrimeStatus::BadPrime;
      rep.bad_reasons[p] = e.what();
    }
  }
  return rep;
}

}  // namespace dnmod
