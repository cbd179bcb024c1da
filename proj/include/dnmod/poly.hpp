#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dnmod/rat.hpp"

namespace dnmod {

/// Dense univariate polynomial over Rat with no trailing zeros. Used for
/// polynomials in D (the p_k of an operator), in t (symbols), and in an
/// auxiliary parameter.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  RatPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  RatPoly(long c) : RatPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  RatPoly(int c) : RatPoly(Rat(c)) {}   // NOLINT(google-explicit-constructor)

  /// The monomial x.
  static RatPoly x();
  /// (x + a).
  static RatPoly linear(const Rat& a, const Rat& b = Rat(1));
  static RatPoly monomial(const Rat& c, std::size_t degree);

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const noexcept { return c_; }
  /// Coefficient of x^i; zero past the degree.
  Rat operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat eval(const Rat& x) const;
  /// p(x + a).
  RatPoly shifted(const Rat& a) const;
  /// p(s * x).
  RatPoly scaled_arg(const Rat& s) const;
  RatPoly derivative() const;
  RatPoly monic() const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const Rat& s);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator-(const RatPoly& a) { return a * Rat(-1); }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rat& s) { return a *= s; }
  friend RatPoly operator*(const Rat& s, RatPoly a) { return a *= s; }
  friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

  /// Returns (quotient, remainder) with deg(remainder) < deg(divisor).
  static std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

  /// Expanded form, e.g. "16*D^3+24*D^2-1".
  std::string str(const std::string& var) const;

 private:
  void trim();
  std::vector<Rat> c_;
};

RatPoly pow(const RatPoly& p, unsigned e);

/// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(RatPoly a, RatPoly b);

/// Squarefree decomposition (Yun): pairs (multiplicity m, monic squarefree
/// factor f_m) with p = lc * prod f_m^m. Factors equal to 1 are omitted.
std::vector<std::pair<unsigned, RatPoly>> squarefree_decomposition(const RatPoly& p);

}  // namespace dnmod
