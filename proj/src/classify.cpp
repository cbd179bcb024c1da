#include "dnmod/classify.hpp"

#include "dnmod/error.hpp"
#include "dnmod/numth.hpp"

namespace dnmod {

unsigned long gamma0_index(unsigned level) {
  unsigned long mu = level;
  for (auto [p, e] : numth::factorize(level)) mu = mu / p * (p + 1);
  return mu;
}

ModularInvariants invariants(unsigned level) {
  if (level == 0) throw Error(Errc::InvalidArgument, "level must be >= 1");
  if (level == 1) return {0, 1, 1, 1};
  const auto primes = numth::factorize(level);
  ModularInvariants inv;

  if (level % 4 == 0) {
    inv.nu2 = 0;
  } else {
    long prod = 1;
    for (auto [p, e] : primes) prod *= 1 + numth::kronecker_symbol(-1, p);
    inv.nu2 = (level % 2 == 0) ? prod / 2 : prod;
  }
  if (level % 9 == 0) {
    inv.nu3 = 0;
  } else {
    long prod = 1;
    for (auto [p, e] : primes) prod *= 1 + numth::kronecker_symbol(-3, p);
    inv.nu3 = prod;
  }
  for (auto d : numth::divisors(level)) inv.nu_inf += static_cast<long>(numth::euler_phi(numth::gcd(d, level / d)));

  // 12 g = 12 + mu - 3 nu2 - 4 nu3 - 6 nu_inf.
  const long twelve_g = 12 + static_cast<long>(gamma0_index(level)) - 3 * inv.nu2 - 4 * inv.nu3 - 6 * inv.nu_inf;
  if (twelve_g % 12 != 0 || twelve_g < 0)
    throw Error(Errc::InvalidArgument, "genus formula gave 12g = " + std::to_string(twelve_g));
  inv.genus = twelve_g / 12;
  return inv;
}

long nonsimple_budget(const ModularInvariants& inv) {
  auto half_up = [](long v) { return (v + 1) / 2; };
  return (half_up(inv.nu_inf) - 1) + half_up(inv.nu2) + half_up(inv.nu3);
}

namespace {

std::string gt(const char* name, long value, long bound) {
  return std::string(name) + "=" + std::to_string(value) + ">" + std::to_string(bound);
}

std::string ne(const char* name, long value, long want) {
  return std::string(name) + "=" + std::to_string(value) + "!=" + std::to_string(want);
}

}  // namespace

FilterVerdict pass_filter(unsigned level, unsigned index) {
  if (level < 2 || index < 1) throw Error(Errc::InvalidArgument, "pass_filter needs N >= 2, d >= 1");
  if (index >= 5) return {false, "d=" + std::to_string(index) + ">=5"};
  const ModularInvariants inv = invariants(level);

  switch (index) {
    case 1: {
      if (inv.genus == 1) {
        if (inv.nu2 != 0) return {false, ne("nu2", inv.nu2, 0)};
        if (inv.nu3 != 0) return {false, ne("nu3", inv.nu3, 0)};
        if (inv.nu_inf != 2) return {false, ne("nu_inf", inv.nu_inf, 2)};
        return {true, "ok"};
      }
      if (inv.genus > 1) return {false, gt("genus", inv.genus, 1)};
      const long b = nonsimple_budget(inv);
      if (b > 1) return {false, "budget B1=" + std::to_string(b) + ">1"};
      return {true, "ok"};
    }
    case 2:
      if (inv.genus != 0) return {false, ne("genus", inv.genus, 0)};
      if (inv.nu_inf > 3) return {false, gt("nu_inf", inv.nu_inf, 3)};
      if (inv.nu3 > 1) return {false, gt("nu3", inv.nu3, 1)};
      if (inv.nu2 > 7) return {false, gt("nu2", inv.nu2, 7)};
      if (level >= 48) return {false, "N=" + std::to_string(level) + ">=48"};
      return {true, "ok"};
    case 3:
      if (inv.genus != 0) return {false, ne("genus", inv.genus, 0)};
      if (inv.nu_inf != 2) return {false, ne("nu_inf", inv.nu_inf, 2)};
      if (inv.nu3 != 1) return {false, ne("nu3", inv.nu3, 1)};
      if (inv.nu2 != 0) return {false, ne("nu2", inv.nu2, 0)};
      return {true, "ok"};
    default:
      if (inv.genus != 0) return {false, ne("genus", inv.genus, 0)};
      if (inv.nu_inf != 2) return {false, ne("nu_inf", inv.nu_inf, 2)};
      if (inv.nu2 != 1) return {false, ne("nu2", inv.nu2, 1)};
      if (inv.nu3 != 0) return {false, ne("nu3", inv.nu3, 0)};
      return {true, "ok"};
  }
}

std::set<Pair> necessary_pairs(unsigned n_max, unsigned d_max) {
  std::set<Pair> out{{1, 1}, {1, 2}};
  for (unsigned n = 2; n <= n_max; ++n)
    for (unsigned d = 1; d <= d_max; ++d)
      if (pass_filter(n, d).pass) out.insert({n, d});
  return out;
}

std::set<Pair> published_pairs() {
  return {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}, {8, 1}, {9, 1},
          {11, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 2}, {5, 2}, {3, 3}, {2, 4}};
}

}  // namespace dnmod
