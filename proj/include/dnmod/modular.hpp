#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dnmod/series.hpp"

namespace dnmod {

/// One factor i^e of an eta quotient, i standing for q^{i/24} prod (1 - q^{in}).
struct EtaFactor {
  unsigned multiplier = 1;
  int exponent = 0;
  friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

/// scale * prod factors.
struct EtaTerm {
  Rat scale{1};
  std::vector<EtaFactor> factors;
  friend bool operator==(const EtaTerm&, const EtaTerm&) = default;
};

/// A hauptmodul recipe: sum of eta-quotient summands plus a constant slot
/// that the uniformizer spec fills. `j_function` selects the level-1 case,
/// where the summand list is empty and the modular j-invariant is used.
struct EtaQuotientRecipe {
  std::vector<EtaTerm> terms;
  bool j_function = false;
  friend bool operator==(const EtaQuotientRecipe&, const EtaQuotientRecipe&) = default;
};

/// sum e_j E_{2,j}.
struct EisensteinCombo {
  std::vector<std::pair<unsigned, Rat>> terms;
  friend bool operator==(const EisensteinCombo&, const EisensteinCombo&) = default;
};

/// The modular solution: either an Eisenstein combination in the local
/// parameter Q, or sqrt(E_4(Q^d)).
struct PhiSpec {
  bool sqrt_e4 = false;
  EisensteinCombo combo;
  friend bool operator==(const PhiSpec&, const PhiSpec&) = default;
};

struct UniformizerSpec {
  unsigned level = 0;
  EtaQuotientRecipe recipe;
  /// The q^0 coefficient of T^{-1}.
  Rat c0;
};

/// Everything needed to run the expansion pipeline for one (N, d).
struct ModularCase {
  unsigned level = 0;
  unsigned index = 1;
  UniformizerSpec uniformizer;
  PhiSpec phi;
};

/// prod_{n >= 1} (1 - x^{jn}) truncated to prec terms. Memoized per (j, prec).
RatSeries eta_body(unsigned j, std::size_t prec);
/// H_j = x^{j/24} prod (1 - x^{jn}).
FracSeries eta_H(unsigned j, std::size_t prec);
/// prod H_i^{e_i}.
FracSeries eta_product(std::span<const EtaFactor> factors, std::size_t prec);

/// E_{2,j}(x) = -(j/24) (1 - 24 sum sigma(n) x^{jn}).
RatSeries eisenstein_E2(unsigned j, std::size_t prec);
/// E_4 = 1 + 240 sum sigma_3(n) x^n.
RatSeries eisenstein_E4(std::size_t prec);
/// j = E_4^3 / H_1^24 as x^{-1} (1 + 744 x + ...).
FracSeries j_invariant(std::size_t prec);

RatSeries eval_combo(const EisensteinCombo& combo, std::size_t prec);

/// Phi as a series in the local parameter Q = q^{1/d}.
RatSeries phi_in_Q(const ModularCase& mc, std::size_t prec);

/// The recipe's own expansion x^{-1}(1 + c x + ...) before the constant is set.
FracSeries uniformizer_inv_raw(const EtaQuotientRecipe& recipe, std::size_t prec);
/// T^{-1}(q) = q^{-1} + c0 + O(q), returned with offset -1.
FracSeries uniformizer_inv(const UniformizerSpec& spec, std::size_t prec);

struct Coordinates {
  RatSeries T_of_q;  // T = 1 / T^{-1}
  RatSeries t_of_Q;  // t = T^{1/d} expressed in Q = q^{1/d}
  RatSeries Q_of_t;  // reversion of t_of_Q
};
Coordinates coordinates(const UniformizerSpec& spec, unsigned index, std::size_t prec);

/// Phi expanded in t = T^{1/d}.
RatSeries phi_in_t(const ModularCase& mc, std::size_t prec);

/// I = Phi(t(Q)) t(Q)^{d(N+1)/12} as a series in Q.
FracSeries i_function(const ModularCase& mc, std::size_t prec);

struct EtaProductCheck {
  bool offsets_match = false;
  /// Number of leading body coefficients compared.
  std::size_t compared = 0;
  /// First differing index, or compared when none.
  std::size_t first_mismatch = 0;
  bool ok() const noexcept { return offsets_match && first_mismatch == compared; }
};
/// Compares I with H_d^2 H_{Nd}^2.
EtaProductCheck eta_product_check(const ModularCase& mc, std::size_t prec);
/// Compares I with an arbitrary eta product.
EtaProductCheck eta_product_check(const ModularCase& mc, std::span<const EtaFactor> factors, std::size_t prec);

}  // namespace dnmod
