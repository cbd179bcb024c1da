#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dnmod {

enum class Errc {
  InvalidArgument,
  NotPrime,
  DivisionByZero,
  DivisionByHigherValuation,
  CompositionNeedsPositiveValuation,
  NotReversible,
  RootNeedsUnitConstantTerm,
  NotLeftDivisibleByD,
  NotLeftDivisibleByT,
  AsymmetricMatrix,
  UnsupportedPair,
  UnsupportedLevel,
  NoD3Annihilator,
  UnderdeterminedFit,
  NotD3Shaped,
  BadPrime,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

// All library failures surface as this exception; `name()` is the stable
// identifier printed by the CLI and checked by tests.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + (detail.empty() ? "" : ": " + detail)),
        code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace dnmod
