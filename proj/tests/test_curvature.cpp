#include <doctest.h>

#include "dnmod/curvature.hpp"
#include "dnmod/error.hpp"
#include "dnmod/fixtures.hpp"
#include "support.hpp"

using namespace dnmod;
using dnmod::testing::code_of;

namespace {

FpRatFun entry(const FpMatrix& m, std::size_t i, std::size_t j) { return m.rows.at(i).at(j); }

// Characteristic-zero iterate a_{k+1} = a_k a + a_k' for a polynomial a,
// reduced mod p afterwards.
std::vector<std::uint64_t> char0_curvature(const RatPoly& a, std::uint64_t p) {
  RatPoly acc = a;
  for (std::uint64_t i = 1; i < p; ++i) acc = acc * a + acc.derivative();
  std::vector<std::uint64_t> out;
  for (const auto& c : acc.coeffs()) out.push_back(fp_reduce(c, p));
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

TEST_CASE("F_p polynomials") {
  const FpPoly a(7, {1, 2, 3});
  const FpPoly b(7, {6, 1});
  const auto [q, r] = FpPoly::divmod(a * b + FpPoly::constant(7, 4), b);
  CHECK(q == a);
  CHECK(r == FpPoly::constant(7, 4));
  CHECK(gcd(a * b, b * b) == b.monic());
  CHECK(FpPoly::monomial(5, 1, 5).derivative().is_zero());
  CHECK(fp_reduce(Rat(1, 2), 5) == 3);
  CHECK(code_of([] { fp_reduce(Rat(1, 10), 5); }) == Errc::BadPrime);
}

TEST_CASE("companion matrices") {
  const FpMatrix m = companion_matrix(WeylOp::D(), 5);
  CHECK(m.dim() == 1);
  CHECK(m.is_zero());
  const FpMatrix half = companion_matrix(parse_operator("D-1/2"), 5);
  CHECK(entry(half, 0, 0).num() == FpPoly::constant(5, 3));
  CHECK(entry(half, 0, 0).den() == FpPoly::monomial(5, 1, 1));
  const Catalog cat = Catalog::load();
  CHECK(code_of([&] { companion_matrix(parse_operator(cat.golden({2, 1}).operator_text), 2); }) == Errc::BadPrime);
  CHECK(code_of([&] { companion_matrix(WeylOp::D(), 9); }) == Errc::NotPrime);
}

TEST_CASE("p-curvature examples") {
  // d/dt - 1 on the torus: D - t.
  const FpMatrix ctl = p_curvature(companion_matrix(parse_operator("D-t"), 7), 7);
  CHECK(entry(ctl, 0, 0).num() == FpPoly::constant(7, 1));
  CHECK(entry(ctl, 0, 0).den() == FpPoly::constant(7, 1));
  CHECK_FALSE(is_nilpotent(ctl));
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u})
    CHECK(p_curvature(companion_matrix(parse_operator("D-1/2"), p), p).is_zero());
  CHECK(is_nilpotent(p_curvature(companion_matrix(parse_operator("D^3"), 5), 5)));
}

TEST_CASE("1x1 systems commute with reduction mod p") {
  const std::vector<RatPoly> cases{RatPoly(std::vector<Rat>{Rat(1), Rat(2)}),
                                   RatPoly(std::vector<Rat>{Rat(1, 3), Rat(0), Rat(-5, 2)}),
                                   RatPoly(std::vector<Rat>{Rat(0), Rat(7)})};
  for (const auto& a : cases) {
    // Operator D - t a(t) has the system y' = a y.
    WeylOp l;
    l += WeylOp::D();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
      l -= WeylOp::term(static_cast<long>(i + 1), RatPoly(a.coeffs()[i]));
    for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
      const FpMatrix c = p_curvature(companion_matrix(l, p), p);
      CHECK(entry(c, 0, 0).den() == FpPoly::constant(p, 1));
      CHECK(entry(c, 0, 0).num().coeffs() == char0_curvature(a, p));
    }
  }
}

TEST_CASE("nilpotence reports") {
  const Catalog cat = Catalog::load();
  const NilpotenceReport r4 = nilpotence_report(parse_operator(cat.golden({4, 1}).operator_text), 5, 43);
  CHECK(r4.consistent_with_global_nilpotence);
  for (const auto& [p, s] : r4.primes) CHECK(s != PrimeStatus::NotNilpotent);
  CHECK(r4.primes.size() == 12);

  const NilpotenceReport ctl = nilpotence_report(parse_operator("D-t"), 3, 43);
  CHECK_FALSE(ctl.consistent_with_global_nilpotence);
  for (const auto& [p, s] : ctl.primes) CHECK(s == PrimeStatus::NotNilpotent);

  const NilpotenceReport empty = nilpotence_report(parse_operator("D^3"), 24, 28);
  CHECK(empty.primes.empty());
  CHECK(empty.consistent_with_global_nilpotence);

  const NilpotenceReport r11 = nilpotence_report(parse_operator(cat.golden({11, 1}).operator_text), 5, 43);
  CHECK(r11.primes.at(5) == PrimeStatus::BadPrime);
  CHECK_FALSE(r11.bad_reasons.at(5).empty());
  CHECK(r11.consistent_with_global_nilpotence);
}
