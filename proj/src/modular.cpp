#include "dnmod/modular.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "dnmod/error.hpp"
#include "dnmod/numth.hpp"

namespace dnmod {

namespace {

// Euler's pentagonal theorem: prod (1 - x^n) = sum_k (-1)^k x^{k(3k-1)/2}.
RatSeries euler_body(std::size_t prec) {
  RatSeries s = RatSeries::zero(prec);
  if (prec == 0) return s;
  s[0] = Rat(1);
  for (long k = 1;; ++k) {
    const auto e1 = static_cast<std::size_t>(k * (3 * k - 1) / 2);
    const auto e2 = static_cast<std::size_t>(k * (3 * k + 1) / 2);
    if (e1 >= prec) break;
    const Rat sign = (k % 2) ? Rat(-1) : Rat(1);
    s[e1] += sign;
    if (e2 < prec) s[e2] += sign;
  }
  return s;
}

class EtaCache {
 public:
  RatSeries get(unsigned j, std::size_t prec) {
    {
      std::shared_lock lock(mu_);
      const auto it = cache_.find(j);
      if (it != cache_.end() && it->second.prec() >= prec) return it->second.truncated(prec);
    }
    const std::size_t base_prec = (prec + j - 1) / j;
    RatSeries body = euler_body(base_prec).substitute_power(j).truncated(prec);
    std::unique_lock lock(mu_);
    auto& slot = cache_[j];
    if (slot.prec() < body.prec()) slot = body;
    return body;
  }

 private:
  std::shared_mutex mu_;
  std::map<unsigned, RatSeries> cache_;
};

EtaCache& eta_cache() {
  static EtaCache cache;
  return cache;
}

}  // namespace

RatSeries eta_body(unsigned j, std::size_t prec) {
  if (j == 0) throw Error(Errc::InvalidArgument, "eta multiplier must be >= 1");
  return eta_cache().get(j, prec);
}

FracSeries eta_H(unsigned j, std::size_t prec) {
  return FracSeries(Rat(static_cast<long>(j), 24), eta_body(j, prec));
}

FracSeries eta_product(std::span<const EtaFactor> factors, std::size_t prec) {
  Rat offset;
  RatSeries body = RatSeries::constant(Rat(1), prec);
  for (const auto& f : factors) {
    offset += Rat(static_cast<long>(f.multiplier) * f.exponent, 24);
    RatSeries b = eta_body(f.multiplier, prec);
    if (f.exponent < 0) b = inverse(b);
    body = body * pow(b, Rat(std::abs(f.exponent)));
  }
  return FracSeries(offset, body);
}

RatSeries eisenstein_E2(unsigned j, std::size_t prec) {
  if (j == 0) throw Error(Errc::InvalidArgument, "E2 index must be >= 1");
  RatSeries s = RatSeries::zero(prec);
  if (prec == 0) return s;
  s[0] = Rat(-static_cast<long>(j), 24);
  for (std::size_t n = 1; n * j < prec; ++n)
    s[n * j] = Rat(static_cast<long>(j * numth::divisor_sigma(1, n)));
  return s;
}

RatSeries eisenstein_E4(std::size_t prec) {
  RatSeries s = RatSeries::zero(prec);
  if (prec == 0) return s;
  s[0] = Rat(1);
  for (std::size_t n = 1; n < prec; ++n) s[n] = Rat(240) * Rat(Int(std::to_string(numth::divisor_sigma(3, n))));
  return s;
}

FracSeries j_invariant(std::size_t prec) {
  const RatSeries e4 = eisenstein_E4(prec);
  const RatSeries delta_body = pow(eta_body(1, prec), Rat(24));
  return FracSeries(Rat(-1), div(pow(e4, Rat(3)), delta_body));
}

RatSeries eval_combo(const EisensteinCombo& combo, std::size_t prec) {
  RatSeries acc = RatSeries::zero(prec);
  for (const auto& [j, e] : combo.terms) acc += eisenstein_E2(j, prec) * e;
  return acc;
}

RatSeries phi_in_Q(const ModularCase& mc, std::size_t prec) {
  if (!mc.phi.sqrt_e4) return eval_combo(mc.phi.combo, prec);
  const std::size_t d = mc.index;
  const std::size_t base = (prec + d - 1) / d;
  return nth_root(eisenstein_E4(base), 2).substitute_power(d).truncated(prec);
}

FracSeries uniformizer_inv_raw(const EtaQuotientRecipe& recipe, std::size_t prec) {
  if (recipe.j_function) return j_invariant(prec);
  if (recipe.terms.empty()) throw Error(Errc::UnsupportedLevel, "empty uniformizer recipe");
  RatSeries acc = RatSeries::zero(prec);
  for (const auto& term : recipe.terms) {
    const FracSeries part = eta_product(term.factors, prec);
    const Rat shift = part.offset() + Rat(1);
    if (!shift.is_integer() || shift.sign() < 0)
      throw Error(Errc::UnsupportedLevel, "summand has q-order " + part.offset().str());
    const auto k = static_cast<std::size_t>(shift.num().get_ui());
    acc += (part.body().shifted_up(k) * term.scale).truncated(prec);
  }
  if (acc[0] != Rat(1))
    throw Error(Errc::UnsupportedLevel, "recipe does not start with q^-1 (got " + acc[0].str() + ")");
  return FracSeries(Rat(-1), acc);
}

FracSeries uniformizer_inv(const UniformizerSpec& spec, std::size_t prec) {
  FracSeries raw = uniformizer_inv_raw(spec.recipe, prec);
  RatSeries body = raw.body();
  if (body.prec() > 1) body[1] = spec.c0;
  return FracSeries(raw.offset(), body);
}

Coordinates coordinates(const UniformizerSpec& spec, unsigned index, std::size_t prec) {
  if (index == 0) throw Error(Errc::InvalidArgument, "index must be >= 1");
  Coordinates c;
  // q T^{-1}(q) = B(q), so T = q u(q) with u = 1/B.
  const RatSeries u = inverse(uniformizer_inv(spec, prec).body());
  c.T_of_q = u.shifted_up(1).truncated(prec);
  const std::size_t base = (prec + index - 1) / index;
  const RatSeries v = nth_root(u.truncated(base), index).substitute_power(index);
  c.t_of_Q = v.shifted_up(1).truncated(prec);
  c.Q_of_t = reversion(c.t_of_Q);
  return c;
}

RatSeries phi_in_t(const ModularCase& mc, std::size_t prec) {
  const Coordinates c = coordinates(mc.uniformizer, mc.index, prec);
  return compose(phi_in_Q(mc, prec), c.Q_of_t);
}

FracSeries i_function(const ModularCase& mc, std::size_t prec) {
  const std::size_t work = prec + 1;
  const Coordinates c = coordinates(mc.uniformizer, mc.index, work);
  const RatSeries phi_t = compose(phi_in_Q(mc, work), c.Q_of_t);
  const RatSeries phi_Q = compose(phi_t, c.t_of_Q);
  const Rat e = Rat(static_cast<long>(mc.index * (mc.level + 1)), 12);
  const FracSeries t_pow = frac_pow(FracSeries(Rat(1), c.t_of_Q.shifted_down(1)), e);
  const FracSeries out = frac_mul(FracSeries(Rat(0), phi_Q.truncated(prec)), t_pow);
  return FracSeries(out.offset(), out.body().truncated(prec));
}

EtaProductCheck eta_product_check(const ModularCase& mc, std::size_t prec) {
  const std::vector<EtaFactor> factors{{mc.index, 2}, {mc.index * mc.level, 2}};
  return eta_product_check(mc, factors, prec);
}

EtaProductCheck eta_product_check(const ModularCase& mc, std::span<const EtaFactor> factors, std::size_t prec) {
  const FracSeries lhs = i_function(mc, prec);
  const FracSeries rhs = eta_product(factors, prec);
  EtaProductCheck r;
  r.offsets_match = lhs.offset() == rhs.offset();
  r.compared = std::min(lhs.prec(), rhs.prec());
  r.first_mismatch = r.compared;
  for (std::size_t i = 0; i < r.compared; ++i) {
    if (lhs.body()[i] != rhs.body()[i]) {
      r.first_mismatch = i;
      break;
    }
  }
  return r;
}

}  // namespace dnmod
