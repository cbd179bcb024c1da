#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dnmod/fixtures.hpp"

namespace dnmod {

struct VerifyOptions {
  std::size_t terms = kDefaultPrecision;
  unsigned jobs = 1;
  bool nilpotence = true;
  std::uint64_t prime_lo = 5;
  std::uint64_t prime_hi = 43;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  /// Empty on pass; otherwise what differed.
  std::string detail;
};

struct PairReport {
  Pair pair;
  Rat c0;
  std::vector<CheckResult> checks;
  /// Set when the pipeline itself threw.
  std::string error;
  std::optional<DNMatrix> recovered;
  WeylOp recovered_op;
  bool ok() const noexcept;
};

/// Checks per pair: matrix (recover vs fixture), operator (dn_build vs
/// fixture text), eta (I vs fixture eta product), mum, adjoint,
/// annihilation and, when enabled, nilpotence. Reports are sorted by pair
/// regardless of the number of jobs.
std::vector<PairReport> verify_pairs(const Catalog& catalog, const std::vector<Pair>& pairs,
                                     const VerifyOptions& opts = {});

Json report_to_json(const std::vector<PairReport>& reports);

}  // namespace dnmod
