#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dnmod/weyl.hpp"

namespace dnmod {

/// Polynomial over F_p, dense, no trailing zeros.
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
  static FpPoly constant(std::uint64_t p, std::uint64_t c);
  static FpPoly monomial(std::uint64_t p, std::uint64_t c, std::size_t degree);

  std::uint64_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return c_.empty(); }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }
  std::uint64_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

  FpPoly derivative() const;
  FpPoly monic() const;
  FpPoly scaled(std::uint64_t s) const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly& a, const FpPoly& b) = default;

  static std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);

 private:
  void trim();
  std::uint64_t p_ = 0;
  std::vector<std::uint64_t> c_;
};

FpPoly gcd(FpPoly a, FpPoly b);
std::uint64_t fp_inverse(std::uint64_t a, std::uint64_t p);
/// Reduces a rational mod p; throws BadPrime when p divides the denominator.
std::uint64_t fp_reduce(const Rat& r, std::uint64_t p);

/// num / den over F_p with gcd(num, den) = 1 and den monic.
class FpRatFun {
 public:
  FpRatFun() = default;
  FpRatFun(FpPoly num, FpPoly den);
  static FpRatFun zero(std::uint64_t p);

  const FpPoly& num() const noexcept { return num_; }
  const FpPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  FpRatFun derivative() const;

  friend FpRatFun operator+(const FpRatFun& a, const FpRatFun& b);
  friend FpRatFun operator*(const FpRatFun& a, const FpRatFun& b);
  friend bool operator==(const FpRatFun& a, const FpRatFun& b) = default;

 private:
  FpPoly num_, den_;
};

/// Square matrix of rational functions over F_p.
struct FpMatrix {
  std::uint64_t p = 0;
  std::vector<std::vector<FpRatFun>> rows;

  std::size_t dim() const noexcept { return rows.size(); }
  bool is_zero() const;
  FpMatrix derivative() const;
  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
};

/// First-order system Y' = M Y over F_p(t) with Y = (y, Dy, ..., D^{n-1} y)
/// and ' = d/dt, for an operator of order n. Throws BadPrime when p divides a
/// coefficient denominator or the symbol polynomial loses its top or bottom
/// coefficient mod p.
FpMatrix companion_matrix(const WeylOp& op, std::uint64_t p);

/// C_p with (d/dt)^p Y = C_p Y: iterate A <- A M + A' from A = M, p - 1 times.
FpMatrix p_curvature(const FpMatrix& m, std::uint64_t p);

bool is_nilpotent(const FpMatrix& m);

enum class PrimeStatus { BadPrime, Nilpotent, NotNilpotent };
std::string_view prime_status_name(PrimeStatus s) noexcept;

struct NilpotenceReport {
  std::map<std::uint64_t, PrimeStatus> primes;
  /// Why each bad prime was rejected.
  std::map<std::uint64_t, std::string> bad_reasons;
  /// True iff no good prime is NotNilpotent (vacuous for an empty range).
  bool consistent_with_global_nilpotence = true;
};

/// Tests every prime in [lo, hi].
NilpotenceReport nilpotence_report(const WeylOp& op, std::uint64_t lo, std::uint64_t hi);

}  // namespace dnmod
