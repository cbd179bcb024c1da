#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dnmod {

/// Genus and elliptic/cusp counts of X_0(N).
struct ModularInvariants {
  long genus = 0;
  long nu2 = 0;
  long nu3 = 0;
  long nu_inf = 0;
  friend bool operator==(const ModularInvariants&, const ModularInvariants&) = default;
};

struct Pair {
  unsigned level = 1;
  unsigned index = 1;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// N = 1 returns the conventional (0, 1, 1, 1).
ModularInvariants invariants(unsigned level);

/// Index of Gamma_0(N) in SL_2(Z): N prod_{p | N} (1 + 1/p).
unsigned long gamma0_index(unsigned level);

struct FilterVerdict {
  bool pass = false;
  /// Stable machine-readable reason, "ok" on pass, e.g. "nu3=2>1".
  std::string reason;
};

/// Lower bound on the number of non-simple nonzero singularities forced
/// by the cusps and elliptic points of X_0(N) for d = 1.
long nonsimple_budget(const ModularInvariants& inv);

/// Necessary conditions for a D3 (N, d)-modular variation (N >= 2).
FilterVerdict pass_filter(unsigned level, unsigned index);

/// (1,1), (1,2) together with every 2 <= N <= n_max, 1 <= d <= d_max
/// passing the filter.
std::set<Pair> necessary_pairs(unsigned n_max, unsigned d_max);

/// The 17 pairs listed by the classification theorem.
std::set<Pair> published_pairs();

}  // namespace dnmod
