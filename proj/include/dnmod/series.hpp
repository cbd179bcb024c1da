#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dnmod/rat.hpp"

namespace dnmod {

/// Default truncation order for every pipeline in the library.
inline constexpr std::size_t kDefaultPrecision = 48;

/// Truncated power series sum_{i < prec} c_i x^i, known modulo x^prec.
class RatSeries {
 public:
  RatSeries() = default;
  explicit RatSeries(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {}

  static RatSeries zero(std::size_t prec) { return RatSeries(std::vector<Rat>(prec)); }
  static RatSeries constant(const Rat& c, std::size_t prec);
  /// The series x (requires prec >= 2 to be non-trivial).
  static RatSeries variable(std::size_t prec);
  /// Exact polynomial truncated to prec.
  static RatSeries from_poly(std::span<const Rat> coeffs, std::size_t prec);

  std::size_t prec() const noexcept { return c_.size(); }
  const std::vector<Rat>& coeffs() const noexcept { return c_; }
  Rat& operator[](std::size_t i) { return c_[i]; }
  const Rat& operator[](std::size_t i) const { return c_[i]; }
  /// Coefficient of x^i, or zero when i >= prec (caller's responsibility).
  Rat at(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

  /// Index of the first nonzero coefficient; prec() for a series that is
  /// zero to the known precision.
  std::size_t valuation() const noexcept;
  bool is_zero() const noexcept { return valuation() == prec(); }

  RatSeries truncated(std::size_t prec) const;
  /// Multiply by x^k (gains k known terms).
  RatSeries shifted_up(std::size_t k) const;
  /// Divide by x^k; requires valuation >= k.
  RatSeries shifted_down(std::size_t k) const;
  /// f(x^k); precision scales by k.
  RatSeries substitute_power(std::size_t k) const;
  /// f(s x).
  RatSeries scaled_arg(const Rat& s) const;
  RatSeries derivative() const;

  RatSeries& operator+=(const RatSeries& o);
  RatSeries& operator-=(const RatSeries& o);
  RatSeries& operator*=(const Rat& s);

  friend RatSeries operator+(RatSeries a, const RatSeries& b) { return a += b; }
  friend RatSeries operator-(RatSeries a, const RatSeries& b) { return a -= b; }
  friend RatSeries operator-(RatSeries a) { return a *= Rat(-1); }
  friend RatSeries operator*(RatSeries a, const Rat& s) { return a *= s; }
  friend RatSeries operator*(const Rat& s, RatSeries a) { return a *= s; }
  friend RatSeries operator*(const RatSeries& a, const RatSeries& b);

  friend bool operator==(const RatSeries& a, const RatSeries& b) = default;

 private:
  std::vector<Rat> c_;
};

RatSeries mul(const RatSeries& a, const RatSeries& b);
RatSeries add(const RatSeries& a, const RatSeries& b);
RatSeries sub(const RatSeries& a, const RatSeries& b);

/// a / b; throws DivisionByHigherValuation unless valuation(b) <= valuation(a)
/// and b is nonzero to its precision.
RatSeries div(const RatSeries& a, const RatSeries& b);
RatSeries inverse(const RatSeries& f);

/// f(g(x)); g must have zero constant term (CompositionNeedsPositiveValuation).
RatSeries compose(const RatSeries& f, const RatSeries& g);
/// Exact polynomial f evaluated at an arbitrary series g.
RatSeries compose_polynomial(std::span<const Rat> f, const RatSeries& g);

/// Compositional inverse of f = c1 x + O(x^2), c1 != 0 (NotReversible).
RatSeries reversion(const RatSeries& f);

/// f^e for a rational exponent; requires f(0) = 1 (RootNeedsUnitConstantTerm)
/// unless e is a nonnegative integer.
RatSeries pow(const RatSeries& f, const Rat& e);
RatSeries nth_root(const RatSeries& f, unsigned n);

/// Series x^offset * body with a single rational leading exponent.
class FracSeries {
 public:
  FracSeries() = default;
  /// Normalizes so that body has a nonzero constant term (or is zero).
  FracSeries(Rat offset, RatSeries body);

  const Rat& offset() const noexcept { return offset_; }
  const RatSeries& body() const noexcept { return body_; }
  std::size_t prec() const noexcept { return body_.prec(); }
  bool is_zero() const noexcept { return body_.is_zero(); }

  /// x^{offset/k} reparametrization: substitutes x -> y^{1/k}. Requires the
  /// body to be supported on exponents divisible by k.
  FracSeries root_substitute(std::size_t k) const;

  friend bool operator==(const FracSeries& a, const FracSeries& b) = default;

 private:
  Rat offset_;
  RatSeries body_;
};

FracSeries frac_mul(const FracSeries& a, const FracSeries& b);
FracSeries frac_pow(const FracSeries& a, const Rat& e);

}  // namespace dnmod
