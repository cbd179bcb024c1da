// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "dnmod/classify.hpp"
#include "dnmod/curvature.hpp"
#include "dnmod/error.hpp"
#include "dnmod/fixtures.hpp"
#include "dnmod/pfit.hpp"

using namespace dnmod;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << "first failure: " << what;
      pass = false;
    }
  }
};

std::mt19937_64 rng(20261017);

Rat random_rat(long height) {
  std::uniform_int_distribution<long> num(-height, height), den(1, height);
  return Rat(num(rng), den(rng));
}

DNMatrix random_d3(long height) {
  return DNMatrix::d3(random_rat(height), random_rat(height), random_rat(height), random_rat(height),
                      random_rat(height), random_rat(height));
}

RatSeries random_series(std::size_t prec, std::size_t valuation, bool unit) {
  std::uniform_int_distribution<long> c(-5, 5), d(1, 4);
  std::vector<Rat> v(prec);
  for (std::size_t i = valuation; i < prec; ++i) v[i] = Rat(c(rng), d(rng));
  if (unit) v[valuation] = Rat(1);
  else if (v[valuation].is_zero()) v[valuation] = Rat(3);
  return RatSeries(std::move(v));
}

std::string pair_str(Pair p) { return "(" + std::to_string(p.level) + "," + std::to_string(p.index) + ")"; }

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main() {
  const Catalog cat = Catalog::load();
  int failures = 0;

  auto run = [&](int id, const std::string& title, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception ") + e.what());
    }
    if (!o.pass) ++failures;
    std::cout << "criterion " << std::setw(2) << id << " " << (o.pass ? "PASS" : "FAIL") << "  " << title << "  ["
              << std::fixed << std::setprecision(2) << seconds_since(t0) << "s]";
    const std::string note = o.note.str();
    if (!note.empty()) std::cout << "  " << note;
    std::cout << std::endl;
  };

  run(1, "table reproduction: recover returns the fixture matrix, 17/17 at 48 terms", [&](Outcome& o) {
    const auto t0 = Clock::now();
    for (const auto& g : cat.cases())
      o.require(recover(cat.modular_case(g.pair), 48).matrix == g.matrix, "matrix " + pair_str(g.pair));
    o.require(seconds_since(t0) < 120, "runtime over 2 minutes");
  });

  run(2, "operator reproduction: dn_build equals the fixture operator, 17/17; d3_expand = dn_build on 100 random",
      [&](Outcome& o) {
        for (const auto& g : cat.cases())
          o.require(dn_build(g.matrix) == parse_operator(g.operator_text), "operator " + pair_str(g.pair));
        for (int i = 0; i < 100; ++i) {
          const DNMatrix a = random_d3(1000);
          o.require(d3_expand(a) == dn_build(a), "random matrix " + std::to_string(i));
        }
      });

  run(3, "eta-product formula: I = H_d^2 H_Nd^2 through 48 terms, 17/17", [&](Outcome& o) {
    for (const auto& g : cat.cases()) {
      const EtaProductCheck c = eta_product_check(cat.modular_case(g.pair), g.eta, 48);
      o.require(c.ok() && c.compared >= 40, "eta " + pair_str(g.pair));
    }
  });

  run(4, "equal Phi and I across d for N in {1,2,3,5}, through 30 terms in q", [&](Outcome& o) {
    for (const auto& g : cat.cases()) {
      const Pair p = g.pair;
      if (p.index == 1 || (p.level != 1 && p.level != 2 && p.level != 3 && p.level != 5)) continue;
      const ModularCase base = cat.modular_case({p.level, 1});
      const ModularCase mc = cat.modular_case(p);
      const std::size_t prec = 30 * p.index;
      const RatSeries phi1 = phi_in_Q(base, 30).substitute_power(p.index);
      o.require(phi_in_Q(mc, prec) == phi1, "Phi " + pair_str(p));
      const FracSeries i1 = i_function(base, 30);
      const FracSeries id = i_function(mc, prec);
      o.require(id.offset() == i1.offset() * Rat(static_cast<long>(p.index)), "I offset " + pair_str(p));
      o.require(id.prec() >= prec && id.body().truncated(prec) == i1.body().substitute_power(p.index).truncated(prec),
                "I body " + pair_str(p));
    }
  });

  run(5, "classifier: necessary_pairs(200,6) = M; reason codes for (10,1), (13,2), (6,2)", [&](Outcome& o) {
    o.require(necessary_pairs(200, 6) == published_pairs(), "pair set");
    o.require(pass_filter(10, 1).reason == "budget B1=2>1", "(10,1) " + pass_filter(10, 1).reason);
    o.require(pass_filter(13, 2).reason == "nu3=2>1", "(13,2) " + pass_filter(13, 2).reason);
    o.require(pass_filter(6, 2).reason == "nu_inf=4>3", "(6,2) " + pass_filter(6, 2).reason);
  });

  run(6, "MUM: indicial polynomial D^3 for 17 operators and 100 random dn_build outputs", [&](Outcome& o) {
    const DPoly d3 = pow(RatPoly::x(), 3);
    for (const auto& g : cat.cases())
      o.require(indicial_at_zero(parse_operator(g.operator_text)) == d3, "indicial " + pair_str(g.pair));
    for (int i = 0; i < 100; ++i) o.require(indicial_at_zero(dn_build(random_d3(1000))) == d3, "random");
  });

  run(7, "adjoint antisymmetry: L* = -L for 17 operators and 100 random N=3 instances", [&](Outcome& o) {
    for (const auto& g : cat.cases()) {
      const WeylOp l = parse_operator(g.operator_text);
      o.require(formal_adjoint(l) == -l, "adjoint " + pair_str(g.pair));
    }
    for (int i = 0; i < 100; ++i) {
      const WeylOp l = dn_build(random_d3(1000));
      o.require(formal_adjoint(l) == -l, "random");
    }
  });

  run(8, "annihilation: L(Phi(t)) = 0 to full precision, 17/17", [&](Outcome& o) {
    for (const auto& g : cat.cases()) {
      const RatSeries phi = phi_in_t(cat.modular_case(g.pair), 48);
      o.require(weyl_apply(parse_operator(g.operator_text), phi).is_zero(), "annihilation " + pair_str(g.pair));
    }
  });

  run(9, "p-curvature: nilpotent at every good prime 5..43 for 17 operators; control D-t not nilpotent",
      [&](Outcome& o) {
        const auto t0 = Clock::now();
        for (const auto& g : cat.cases()) {
          const NilpotenceReport r = nilpotence_report(parse_operator(g.operator_text), 5, 43);
          bool any_good = false;
          for (const auto& [p, s] : r.primes) {
            o.require(s != PrimeStatus::NotNilpotent, pair_str(g.pair) + " at p=" + std::to_string(p));
            any_good = any_good || s == PrimeStatus::Nilpotent;
          }
          o.require(any_good, pair_str(g.pair) + " has no good prime");
        }
        const NilpotenceReport ctl = nilpotence_report(parse_operator("D-t"), 5, 43);
        o.require(!ctl.consistent_with_global_nilpotence, "control operator");
        for (const auto& [p, s] : ctl.primes) o.require(s == PrimeStatus::NotNilpotent, "control at " + std::to_string(p));
        o.require(seconds_since(t0) < 30, "runtime over 30 seconds");
      });

  run(10, "series kernel: reversion, nth_root, associativity; 100 cases each at 60 terms", [&](Outcome& o) {
    constexpr std::size_t P = 60;
    const RatSeries x = RatSeries::variable(P);
    for (int i = 0; i < 100; ++i) {
      const RatSeries f = random_series(P, 1, false);
      o.require(compose(f, reversion(f)) == x && reversion(reversion(f)) == f, "reversion");
    }
    for (int i = 0; i < 100; ++i) {
      const RatSeries f = random_series(P, 0, true);
      const unsigned n = 2 + static_cast<unsigned>(i % 4);
      o.require(pow(nth_root(f, n), Rat(static_cast<long>(n))) == f, "nth_root");
    }
    for (int i = 0; i < 100; ++i) {
      const RatSeries f = random_series(P, 0, false), g = random_series(P, 1, false), h = random_series(P, 1, false);
      o.require(compose(f, compose(g, h)) == compose(compose(f, g), h), "associativity");
    }
  });

  run(11, "pipeline consistency: regularize_pipeline vs dn_build under the pinned relation, 25 random",
      [&](Outcome& o) {
        const Json rel = read_json_file(data_dir() + "/pipeline_relation.json");
        o.require(rel.at("relation") == "identity", "unexpected recorded relation");
        rng.seed(rel.at("seed").get<std::uint64_t>());
        const long height = rel.at("height").get<long>();
        const int n = rel.at("instances").get<int>();
        for (int i = 0; i < n; ++i) {
          const DNMatrix a = random_d3(height);
          const WeylOp piped = regularize_pipeline(a);
          o.require(piped == dn_build(a), "identity, instance " + std::to_string(i));
          const Extraction e = try_extract_matrix(normalize_operator(piped));
          o.require(e.ok() && same_class(*e.matrix, a), "same class, instance " + std::to_string(i));
        }
        for (const auto& pin : rel.at("pinned")) {
          const DNMatrix a = matrix_from_json(pin.at("matrix"));
          o.require(regularize_pipeline(a) == parse_operator(pin.at("operator").get<std::string>()), "pinned");
        }
      });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
