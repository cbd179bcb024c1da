#include "dnmod/numth.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dnmod/error.hpp"

namespace dnmod::numth {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m * m <= n; ++m) {
    if (n % m) continue;
    out.push_back(m);
    if (m * m != n) out.push_back(n / m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t divisor_sigma(unsigned k, std::uint64_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "divisor_sigma needs n >= 1");
  std::uint64_t total = 0;
  for (auto m : divisors(n)) {
    std::uint64_t term = 1;
    for (unsigned i = 0; i < k; ++i) term *= m;
    total += term;
  }
  return total;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "euler_phi needs n >= 1");
  std::uint64_t result = n;
  for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace

int kronecker_symbol(std::int64_t a, std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) {
    if (a % 2 == 0) return 0;
    const auto r = ((a % 8) + 8) % 8;
    return (r == 1 || r == 7) ? 1 : -1;
  }
  const auto ip = static_cast<std::int64_t>(p);
  const auto r = static_cast<std::uint64_t>(((a % ip) + ip) % ip);
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace dnmod::numth
