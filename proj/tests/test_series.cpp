#include <doctest.h>

#include "dnmod/error.hpp"
#include "dnmod/modular.hpp"
#include "dnmod/series.hpp"
#include "support.hpp"

using namespace dnmod;
using namespace dnmod::testing;

namespace {

RatSeries poly(std::initializer_list<long> c, std::size_t prec) {
  std::vector<Rat> v(prec);
  std::size_t i = 0;
  for (long x : c) {
    if (i < prec) v[i] = Rat(x);
    ++i;
  }
  return RatSeries(std::move(v));
}

// Lagrange inversion: [x^n] f^{-1} = (1/n) [x^{n-1}] (x / f)^n.
std::vector<Rat> lagrange_reversion(const RatSeries& f, std::size_t prec) {
  std::vector<Rat> h(prec);  // h = f / x
  for (std::size_t i = 0; i + 1 < f.prec() && i < prec; ++i) h[i] = f[i + 1];
  // Invert h by the schoolbook recurrence.
  std::vector<Rat> inv(prec);
  inv[0] = Rat(1) / h[0];
  for (std::size_t n = 1; n < prec; ++n) {
    Rat acc;
    for (std::size_t k = 1; k <= n; ++k) acc += h[k] * inv[n - k];
    inv[n] = -acc / h[0];
  }
  std::vector<Rat> out(prec);
  for (std::size_t n = 1; n < prec; ++n) out[n] = naive_pow(inv, static_cast<unsigned>(n), n)[n - 1] / Rat(static_cast<long>(n));
  return out;
}

}  // namespace

TEST_CASE("arithmetic examples") {
  const std::size_t P = 6;
  CHECK(poly({1, 1}, P) * poly({1, -1}, P) == poly({1, 0, -1}, P));
  CHECK((poly({1, 1}, P) + poly({-1, -1}, P)).is_zero());
  CHECK(poly({1, 1}, P) * poly({1, 1}, P) == poly({1, 2, 1}, P));
  CHECK(mul(poly({1}, 3), poly({1}, 5)).prec() == 3);
}

TEST_CASE("division") {
  const std::size_t P = 8;
  CHECK(div(poly({1}, P), poly({1, -1}, P)) == poly({1, 1, 1, 1, 1, 1, 1, 1}, P));
  CHECK(div(poly({0, 1, 1}, P), poly({0, 1}, P)).truncated(2) == poly({1, 1}, 2));
  CHECK(code_of([&] { div(poly({0, 1}, P), poly({0, 0, 0, 1}, P)); }) == Errc::DivisionByHigherValuation);
}

TEST_CASE("composition") {
  const std::size_t P = 8;
  CHECK(compose(poly({1, 1}, P), poly({0, 0, 1}, P)) == poly({1, 0, 1}, P));
  CHECK(compose(poly({1, 1, 1, 1, 1, 1, 1, 1}, P), poly({0, 2}, P)) == poly({1, 2, 4, 8, 16, 32, 64, 128}, P));
  CHECK(code_of([&] { compose(poly({1, 1}, P), poly({1, 1}, P)); }) == Errc::CompositionNeedsPositiveValuation);
  const RatSeries f = poly({0, 1, 1}, P);
  CHECK(compose(f, reversion(f)) == RatSeries::variable(P));
}

TEST_CASE("reversion examples") {
  const std::size_t P = 8;
  CHECK(reversion(div(poly({0, 1}, P), poly({1, -1}, P))) == poly({0, 1, -1, 1, -1, 1, -1, 1}, P));
  CHECK(reversion(RatSeries::variable(P)) == RatSeries::variable(P));
  CHECK(reversion(poly({0, 1, 1}, P)) == poly({0, 1, -1, 2, -5, 14, -42, 132}, P));
  CHECK(code_of([&] { reversion(poly({1, 1}, P)); }) == Errc::NotReversible);
  CHECK(code_of([&] { reversion(poly({0, 0, 1}, P)); }) == Errc::NotReversible);
}

TEST_CASE("reversion matches the Lagrange inversion oracle") {
  for (int i = 0; i < 20; ++i) {
    const RatSeries f = random_series(16, 1, false);
    CHECK(reversion(f).coeffs() == lagrange_reversion(f, 16));
  }
}

TEST_CASE("roots") {
  const std::size_t P = 10;
  CHECK(nth_root(poly({1, 2, 1}, P), 2) == poly({1, 1}, P));
  CHECK(nth_root(poly({1}, P), 7) == poly({1}, P));
  const RatSeries s = nth_root(eisenstein_E4(P), 2);
  CHECK(s[0] == Rat(1));
  CHECK(s[1] == Rat(120));
  CHECK(s[2] == Rat(-6120));
  CHECK(code_of([&] { nth_root(poly({2, 1}, P), 2); }) == Errc::RootNeedsUnitConstantTerm);
  CHECK(pow(poly({1, 1}, P), Rat(-1)) == poly({1, -1, 1, -1, 1, -1, 1, -1, 1, -1}, P));
  CHECK(pow(poly({2, 1}, P), Rat(3)) == poly({8, 12, 6, 1}, P));
}

TEST_CASE("fractional series") {
  const FracSeries half(Rat(1, 2), poly({1}, 5));
  const FracSeries sq = frac_pow(half, Rat(2));
  CHECK(sq.offset() == Rat(1));
  CHECK(sq.body() == poly({1}, 5));
  // Leading zeros move into the offset.
  const FracSeries shifted(Rat(0), poly({0, 0, 3, 1}, 6));
  CHECK(shifted.offset() == Rat(2));
  CHECK(shifted.body()[0] == Rat(3));
  const FracSeries prod = frac_mul(FracSeries(Rat(1, 3), poly({1, 1}, 6)), FracSeries(Rat(-1, 3), poly({1, -1}, 6)));
  CHECK(prod.offset() == Rat(0));
  CHECK(prod.body() == poly({1, 0, -1}, 6));
}

TEST_CASE("structural operations") {
  const RatSeries f = poly({1, 2, 3}, 4);
  CHECK(f.substitute_power(2) == poly({1, 0, 2, 0, 3, 0, 0, 0}, 8));
  CHECK(f.shifted_up(1) == poly({0, 1, 2, 3, 0}, 5));
  CHECK(f.derivative() == poly({2, 6, 0}, 3));
  CHECK(f.scaled_arg(Rat(-1)) == poly({1, -2, 3, 0}, 4));
  CHECK(f.valuation() == 0);
  CHECK(RatSeries::zero(4).valuation() == 4);
}

TEST_CASE("property: reversion round trips at 60 terms") {
  constexpr std::size_t P = 60;
  for (int i = 0; i < 100; ++i) {
    const RatSeries f = random_series(P, 1, i % 2 == 0, 5);
    const RatSeries g = reversion(f);
    CHECK(compose(f, g) == RatSeries::variable(P));
    CHECK(compose(g, f) == RatSeries::variable(P));
  }
}

TEST_CASE("property: nth_root powers back at 60 terms") {
  constexpr std::size_t P = 60;
  for (int i = 0; i < 100; ++i) {
    const RatSeries f = random_series(P, 0, true, 5);
    const unsigned n = static_cast<unsigned>(2 + i % 4);
    const RatSeries r = nth_root(f, n);
    CHECK(naive_pow(r.coeffs(), n, P) == f.coeffs());
  }
}

TEST_CASE("property: composition is associative at 60 terms") {
  constexpr std::size_t P = 60;
  for (int i = 0; i < 100; ++i) {
    const RatSeries f = random_series(P, 0, false, 3);
    const RatSeries g = random_series(P, 1, false, 3);
    const RatSeries h = random_series(P, 1, false, 3);
    CHECK(compose(f, compose(g, h)) == compose(compose(f, g), h));
  }
}

TEST_CASE("property: multiplication matches schoolbook product") {
  for (int i = 0; i < 100; ++i) {
    const RatSeries a = random_series(40, 0, false), b = random_series(40, 0, false);
    CHECK((a * b).coeffs() == naive_mul(a.coeffs(), b.coeffs(), 40));
    CHECK(div(a * b, b) == a);
  }
}
