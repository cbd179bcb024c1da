#pragma once

#include <optional>
#include <random>
#include <vector>

#include "dnmod/error.hpp"
#include "dnmod/series.hpp"
#include "dnmod/weyl.hpp"

namespace dnmod::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20261017);
  return g;
}

/// p/q with |p| <= height, 1 <= q <= height.
inline Rat random_rat(long height = 1000) {
  std::uniform_int_distribution<long> num(-height, height), den(1, height);
  return Rat(num(rng()), den(rng()));
}

inline long random_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline DNMatrix random_d3(long height = 1000) {
  return DNMatrix::d3(random_rat(height), random_rat(height), random_rat(height), random_rat(height),
                      random_rat(height), random_rat(height));
}

/// Random series with small coefficients and prescribed leading terms.
inline RatSeries random_series(std::size_t prec, std::size_t valuation, bool unit_lead, long height = 9) {
  std::vector<Rat> c(prec);
  for (std::size_t i = valuation; i < prec; ++i) c[i] = Rat(random_int(-height, height), random_int(1, 4));
  if (valuation < prec) {
    if (unit_lead) {
      c[valuation] = Rat(1);
    } else if (c[valuation].is_zero()) {
      c[valuation] = Rat(random_int(1, height));
    }
  }
  return RatSeries(std::move(c));
}

/// Schoolbook truncated product, independent of the library kernel.
inline std::vector<Rat> naive_mul(const std::vector<Rat>& a, const std::vector<Rat>& b, std::size_t prec) {
  std::vector<Rat> out(prec);
  for (std::size_t i = 0; i < a.size() && i < prec; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < prec; ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline std::vector<Rat> naive_pow(const std::vector<Rat>& a, unsigned e, std::size_t prec) {
  std::vector<Rat> out(prec);
  out[0] = Rat(1);
  for (unsigned i = 0; i < e; ++i) out = naive_mul(out, a, prec);
  return out;
}

// Empty when f returns normally.
inline std::optional<Errc> code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace dnmod::testing
