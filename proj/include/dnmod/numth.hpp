#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace dnmod::numth {

/// Sum of k-th powers of the positive divisors of n (n >= 1).
std::uint64_t divisor_sigma(unsigned k, std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Distinct prime factors with multiplicity, ascending. Trial division.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Legendre symbol (a/p) for odd prime p, Kronecker extension at p = 2.
/// Throws Error(NotPrime) unless p is prime.
int kronecker_symbol(std::int64_t a, std::uint64_t p);

std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

}  // namespace dnmod::numth
