#include <doctest.h>

#include "dnmod/error.hpp"
#include "dnmod/numth.hpp"
#include "dnmod/rat.hpp"

using namespace dnmod;

namespace {

std::uint64_t brute_sigma(unsigned k, std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    std::uint64_t p = 1;
    for (unsigned i = 0; i < k; ++i) p *= d;
    s += p;
  }
  return s;
}

std::uint64_t brute_phi(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (numth::gcd(k, n) == 1) ++c;
  return c;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// Quadratic residue by exhaustive squaring.
int brute_legendre(std::int64_t a, std::uint64_t p) {
  const auto r = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                                            static_cast<std::int64_t>(p));
  if (r == 0) return 0;
  for (std::uint64_t x = 1; x < p; ++x)
    if (x * x % p == r) return 1;
  return -1;
}

}  // namespace

TEST_CASE("divisor_sigma examples") {
  CHECK(numth::divisor_sigma(1, 6) == 12);
  CHECK(numth::divisor_sigma(1, 1) == 1);
  CHECK(numth::divisor_sigma(3, 2) == 9);
}

TEST_CASE("divisor_sigma agrees with brute force") {
  for (unsigned k = 0; k <= 3; ++k)
    for (std::uint64_t n = 1; n <= 400; ++n) CHECK(numth::divisor_sigma(k, n) == brute_sigma(k, n));
}

TEST_CASE("euler_phi examples and brute force") {
  CHECK(numth::euler_phi(1) == 1);
  CHECK(numth::euler_phi(12) == 4);
  CHECK(numth::euler_phi(11) == 10);
  for (std::uint64_t n = 1; n <= 1000; ++n) CHECK(numth::euler_phi(n) == brute_phi(n));
}

TEST_CASE("kronecker examples") {
  CHECK(numth::kronecker_symbol(-1, 2) == 1);
  CHECK(numth::kronecker_symbol(-3, 11) == -1);
  CHECK(numth::kronecker_symbol(-3, 3) == 0);
  CHECK(numth::kronecker_symbol(-3, 2) == -1);
}

TEST_CASE("kronecker agrees with exhaustive squaring and Euler's criterion") {
  for (std::uint64_t p = 3; p < 300; ++p) {
    if (!numth::is_prime(p)) continue;
    for (std::int64_t a = -40; a <= 40; ++a) {
      const int want = brute_legendre(a, p);
      CHECK(numth::kronecker_symbol(a, p) == want);
      const auto r = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                                                static_cast<std::int64_t>(p));
      if (r) CHECK(powmod(r, (p - 1) / 2, p) == (want == 1 ? 1 : p - 1));
    }
  }
}

TEST_CASE("kronecker rejects composite modulus") {
  CHECK_THROWS_AS(numth::kronecker_symbol(-1, 9), Error);
  try {
    numth::kronecker_symbol(-1, 15);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPrime);
  }
}

TEST_CASE("factorize, divisors and primality are consistent") {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    std::uint64_t prod = 1;
    for (auto [p, e] : numth::factorize(n)) {
      CHECK(numth::is_prime(p));
      for (unsigned i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
    std::uint64_t count = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) ++count;
    CHECK(numth::divisors(n).size() == count);
  }
}

TEST_CASE("rational arithmetic") {
  CHECK(Rat::parse("6/4") == Rat(3, 2));
  CHECK(Rat::parse("-7") == Rat(-7));
  CHECK(Rat(3, 2).str() == "3/2");
  CHECK(Rat(-4, 2).str() == "-2");
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(pow(Rat(2, 3), -2) == Rat(9, 4));
  CHECK_THROWS_AS(Rat(1) / Rat(0), Error);
  CHECK_THROWS_AS(Rat::parse("1/0"), Error);
  CHECK_THROWS_AS(Rat::parse("abc"), Error);
}
