#include <doctest.h>

#include "dnmod/error.hpp"
#include "dnmod/fixtures.hpp"
#include "dnmod/pfit.hpp"
#include "support.hpp"

using namespace dnmod;
using namespace dnmod::testing;

namespace {

const Catalog& catalog() {
  static const Catalog c = Catalog::load();
  return c;
}

// Solves L y = 0 term by term for y = 1 + ..., where L = D^3 + sum t^k p_k.
RatSeries solve_mum(const WeylOp& l, std::size_t prec) {
  std::vector<Rat> y(prec);
  y[0] = Rat(1);
  for (std::size_t n = 1; n < prec; ++n) {
    Rat acc;
    for (const auto& [k, p] : l.terms()) {
      if (k == 0 || static_cast<std::size_t>(k) > n) continue;
      acc += p.eval(Rat(static_cast<long>(n) - k)) * y[n - static_cast<std::size_t>(k)];
    }
    y[n] = -acc / Rat(static_cast<long>(n * n * n));
  }
  return RatSeries(std::move(y));
}

}  // namespace

TEST_CASE("fit examples") {
  CHECK(fit_d3(RatSeries::constant(Rat(1), 30)).str() == "D^3");
  CHECK(fit_d3(phi_in_t(catalog().modular_case({2, 1}), 48)) ==
        parse_operator("D^3-8*t*(2*D+1)*(4*D+3)*(4*D+1)"));
  CHECK(fit_d3(phi_in_t(catalog().modular_case({5, 2}), 48)) ==
        parse_operator("D^3-4*t^2*(D+1)*(11*D^2+22*D+12)-16*t^4*(D+3)*(D+2)*(D+1)"));
}

TEST_CASE("fit selects the minimal t-degree") {
  const FitReport r = fit_d3_report(phi_in_t(catalog().modular_case({2, 1}), 48));
  CHECK(r.tdeg == 1);
  CHECK(r.rank == 4);
  CHECK(fit_d3_report(phi_in_t(catalog().modular_case({11, 1}), 48)).tdeg == 4);
}

TEST_CASE("fit recovers operators from their own solutions") {
  for (int i = 0; i < 25; ++i) {
    const WeylOp l = dn_build(random_d3(50));
    CHECK(fit_d3(solve_mum(l, 40)) == l);
  }
}

TEST_CASE("fit errors") {
  // Too few equations for the surplus rule.
  CHECK(code_of([&] { fit_d3(phi_in_t(catalog().modular_case({11, 1}), 20)); }) == Errc::UnderdeterminedFit);
  // A random series satisfies no order-3 equation of bounded t-degree.
  const RatSeries e = random_series(40, 0, true);
  CHECK(code_of([&] { fit_d3(e); }) == Errc::NoD3Annihilator);
  CHECK(code_of([&] { fit_d3(RatSeries::constant(Rat(2), 30)); }) == Errc::InvalidArgument);
}

TEST_CASE("extraction") {
  CHECK(extract_matrix(parse_operator("D^3")) == DNMatrix(3));
  const DNMatrix l11 = extract_matrix(fit_d3(phi_in_t(catalog().modular_case({11, 1}), 48)));
  CHECK(l11 == DNMatrix::d3(Rat(12, 5), Rat(24), Rat(198), Rat(880), Rat(22, 5), Rat(44)));
  const Extraction bad = try_extract_matrix(parse_operator("D^3+t*D^3"));
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.residual.is_zero());
  CHECK(code_of([&] { extract_matrix(parse_operator("D^3+t*D^3")); }) == Errc::NotD3Shaped);
  CHECK_FALSE(try_extract_matrix(parse_operator("D^3+t^5")).ok());
}

TEST_CASE("recover examples") {
  CHECK(recover(catalog().modular_case({2, 1})).matrix == catalog().golden({2, 1}).matrix);
  const DNMatrix m12 = recover(catalog().modular_case({1, 2})).matrix;
  CHECK(m12.at(0, 0) == Rat(0));
  CHECK(m12.at(1, 1) == Rat(0));
  CHECK(m12.at(0, 1) == Rat(240));
  CHECK(m12.at(1, 2) == Rat(1248));
  CHECK(m12.at(0, 3) == Rat(57600));
  const DNMatrix m24 = recover(catalog().modular_case({2, 4})).matrix;
  CHECK(m24 == DNMatrix::d3(0, 0, 0, Rat(256), 0, 0));
}

TEST_CASE("fit is stable between 30 and 48 terms") {
  for (const Pair p : catalog().pairs()) {
    CAPTURE(p.level);
    CAPTURE(p.index);
    const ModularCase mc = catalog().modular_case(p);
    CHECK(fit_d3(phi_in_t(mc, 30)) == fit_d3(phi_in_t(mc, 48)));
  }
}

TEST_CASE("shifting the uniformizer constant leaves the D3 shape") {
  // Recorded behaviour: the fit still finds an annihilator, extraction rejects it.
  for (const Pair p : std::vector<Pair>{{2, 1}, {3, 1}, {4, 1}}) {
    const Rat c0 = catalog().golden(p).c0;
    for (const Rat& delta : {Rat(1), Rat(-1, 2), Rat(3)}) {
      const ModularCase mc = catalog().modular_case(p, c0 + delta);
      CHECK(code_of([&] { recover(mc); }) == Errc::NotD3Shaped);
    }
  }
}

TEST_CASE("auto-c0 finds the table constant") {
  for (const Pair p : std::vector<Pair>{{2, 1}, {3, 1}, {5, 2}, {11, 1}}) {
    const AutoC0Result r = auto_c0(catalog().modular_case(p));
    CHECK_FALSE(r.degenerate);
    CHECK(r.verified == std::vector<Rat>{catalog().golden(p).c0});
  }
}
