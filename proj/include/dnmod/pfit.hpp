#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dnmod/modular.hpp"
#include "dnmod/poly.hpp"
#include "dnmod/series.hpp"
#include "dnmod/weyl.hpp"

namespace dnmod {

inline constexpr long kFitMaxTdeg = 4;
inline constexpr std::size_t kFitSurplus = 8;

struct FitReport {
  WeylOp op;
  /// Largest t-degree K allowed in the accepted system (4K unknowns).
  long tdeg = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
};

/// Finds D^3 + sum_{k=1..K} t^k p_k(D), deg p_k <= 3, annihilating phi to
/// its precision, for the smallest K in 0..4 whose coefficient system is
/// consistent. Left multiples (1 + c t + ...) L of an annihilator stay in
/// this ansatz, so only the minimal K has a unique solution. The accepted
/// system must have full rank 4K and at least 8 surplus equations
/// (UnderdeterminedFit); no consistent K gives NoD3Annihilator.
FitReport fit_d3_report(const RatSeries& phi);
WeylOp fit_d3(const RatSeries& phi);

/// Outcome of the staged inversion of the D3 expansion.
struct Extraction {
  std::optional<DNMatrix> matrix;
  /// L - d3_expand(matrix) (or the part of L outside the D3 shape).
  WeylOp residual;
  bool ok() const noexcept { return matrix.has_value() && residual.is_zero(); }
};
Extraction try_extract_matrix(const WeylOp& op);
/// Throws NotD3Shaped with the residual in the message.
DNMatrix extract_matrix(const WeylOp& op);

struct Recovery {
  RatSeries phi_t;
  WeylOp op;
  DNMatrix matrix;
};
/// phi_in_t -> fit_d3 -> extract_matrix.
Recovery recover(const ModularCase& mc, std::size_t prec = kDefaultPrecision);

/// Diagnostic: treats the uniformizer constant as unknown. Phi is expanded
/// once at the recipe's own constant c_ref; shifting the constant by delta
/// re-expands it exactly as Phi(t (1 - delta t^d)^{-1/d}), whose coefficients
/// are polynomials in delta. The D3 shape is linear in six parameters, so
/// consistency of the overdetermined system becomes polynomial equations in
/// delta; their common rational roots are the candidate constants.
struct AutoC0Result {
  Rat reference_c0;
  /// gcd of all consistency polynomials, in delta = c0 - reference_c0.
  RatPoly consistency;
  /// True when every delta is consistent (all consistency polynomials vanish).
  bool degenerate = false;
  std::vector<Rat> candidates;
  /// Candidates for which the full fit and extraction succeed at `verify_prec`.
  std::vector<Rat> verified;
};
AutoC0Result auto_c0(const ModularCase& mc, std::size_t prec = 24, std::size_t verify_prec = kDefaultPrecision);

}  // namespace dnmod
