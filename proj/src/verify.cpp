#include "dnmod/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "dnmod/curvature.hpp"
#include "dnmod/error.hpp"
#include "dnmod/pfit.hpp"

namespace dnmod {

bool PairReport::ok() const noexcept {
  if (!error.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

std::string matrix_diff(const DNMatrix& got, const DNMatrix& want) {
  if (got.order() != want.order()) return "order " + std::to_string(got.order()) + " vs " + std::to_string(want.order());
  std::string out;
  for (const auto& [ij, w] : want.entries()) {
    const Rat g = got.at(ij.first, ij.second);
    if (g != w) {
      if (!out.empty()) out += "; ";
      out += "a" + std::to_string(ij.first) + std::to_string(ij.second) + ": got " + g.str() + ", want " + w.str();
    }
  }
  return out;
}

CheckResult check(std::string name, bool pass, std::string detail) {
  return {std::move(name), pass, pass ? std::string() : std::move(detail)};
}

PairReport verify_one(const Catalog& catalog, Pair p, const VerifyOptions& opts) {
  PairReport rep;
  rep.pair = p;
  try {
    const GoldenFixture& g = catalog.golden(p);
    rep.c0 = g.c0;
    const ModularCase mc = catalog.modular_case(p);
    const WeylOp fixture_op = parse_operator(g.operator_text);

    const Recovery rec = recover(mc, opts.terms);
    rep.recovered = rec.matrix;
    rep.recovered_op = rec.op;
    rep.checks.push_back(check("matrix", rec.matrix == g.matrix, matrix_diff(rec.matrix, g.matrix)));

    const WeylOp built = dn_build(g.matrix);
    rep.checks.push_back(check("operator", built == fixture_op,
                               "dn_build gives " + built.str() + ", fixture " + fixture_op.str()));

    const EtaProductCheck eta = eta_product_check(mc, g.eta, opts.terms);
    rep.checks.push_back(check("eta", eta.ok(),
                               eta.offsets_match ? "first mismatch at index " + std::to_string(eta.first_mismatch)
                                                 : std::string("leading exponents differ")));

    const DPoly indicial = indicial_at_zero(fixture_op);
    rep.checks.push_back(check("mum", indicial == pow(RatPoly::x(), 3), "indicial polynomial " + indicial.str("D")));

    const WeylOp adj = formal_adjoint(fixture_op);
    rep.checks.push_back(check("adjoint", adj == -fixture_op, "L* + L = " + (adj + fixture_op).str()));

    const RatSeries image = weyl_apply(fixture_op, rec.phi_t);
    rep.checks.push_back(check("annihilation", image.is_zero(),
                               "L(Phi) nonzero at t^" + std::to_string(image.valuation())));

    if (opts.nilpotence) {
      const NilpotenceReport nil = nilpotence_report(fixture_op, opts.prime_lo, opts.prime_hi);
      std::string failing;
      for (const auto& [prime, status] : nil.primes)
        if (status == PrimeStatus::NotNilpotent) failing += (failing.empty() ? "" : ",") + std::to_string(prime);
      rep.checks.push_back(check("nilpotence", nil.consistent_with_global_nilpotence, "not nilpotent at " + failing));
    }
  } catch (const Error& e) {
    rep.error = e.what();
  }
  return rep;
}

}  // namespace

std::vector<PairReport> verify_pairs(const Catalog& catalog, const std::vector<Pair>& pairs,
                                     const VerifyOptions& opts) {
  // Unknown pairs fail before any work starts.
  for (const Pair& p : pairs) catalog.golden(p);

  std::vector<PairReport> out(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) out[i] = verify_one(catalog, pairs[i], opts);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(pairs.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::sort(out.begin(), out.end(), [](const PairReport& a, const PairReport& b) { return a.pair < b.pair; });
  return out;
}

Json report_to_json(const std::vector<PairReport>& reports) {
  Json cases = Json::array();
  std::size_t passed = 0;
  for (const auto& r : reports) {
    Json checks = Json::object();
    for (const auto& c : r.checks) checks[c.name] = c.pass ? Json("pass") : Json(c.detail);
    Json j{{"pair", Json::array({r.pair.level, r.pair.index})},
           {"c0", rat_to_json(r.c0)},
           {"status", r.ok() ? "pass" : "fail"},
           {"checks", checks}};
    if (r.recovered) j["matrix"] = matrix_to_json(*r.recovered);
    if (!r.error.empty()) j["error"] = r.error;
    if (r.ok()) ++passed;
    cases.push_back(std::move(j));
  }
  return Json{{"cases", cases},
              {"summary", std::to_string(passed) + "/" + std::to_string(reports.size()) + " pass"},
              {"ok", passed == reports.size()}};
}

}  // namespace dnmod
