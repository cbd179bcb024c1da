#include "dnmod/fixtures.hpp"

#include <algorithm>
#include <cstdlib>

#include "dnmod/error.hpp"

#ifndef DNMOD_DEFAULT_DATA_DIR
#define DNMOD_DEFAULT_DATA_DIR "data"
#endif

namespace dnmod {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, std::string(what) + ": " + e.what());
  }
}

Json factors_to_json(const std::vector<EtaFactor>& fs) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back(Json::array({f.multiplier, f.exponent}));
  return out;
}

std::vector<EtaFactor> factors_from_json(const Json& j) {
  std::vector<EtaFactor> out;
  for (const auto& f : j) out.push_back({f.at(0).get<unsigned>(), f.at(1).get<int>()});
  return out;
}

}  // namespace

std::string data_dir() {
  if (const char* env = std::getenv("DNMOD_DATA_DIR"); env && *env) return env;
  return DNMOD_DEFAULT_DATA_DIR;
}

std::vector<GoldenFixture> parse_golden(const Json& j) {
  return guarded("golden fixtures", [&] {
    std::vector<GoldenFixture> out;
    for (const auto& c : j.at("cases")) {
      GoldenFixture g;
      g.pair = {c.at("pair").at(0).get<unsigned>(), c.at("pair").at(1).get<unsigned>()};
      g.c0 = rat_from_json(c.at("c0"));
      g.matrix = matrix_from_json(c.at("matrix"));
      g.operator_text = c.at("operator").get<std::string>();
      g.phi = phi_from_json(c.at("phi"));
      g.eta = factors_from_json(c.at("eta"));
      g.provenance = c.at("provenance").get<std::string>();
      out.push_back(std::move(g));
    }
    return out;
  });
}

Json golden_to_json(const std::vector<GoldenFixture>& cases) {
  Json arr = Json::array();
  for (const auto& g : cases) {
    arr.push_back(Json{{"pair", Json::array({g.pair.level, g.pair.index})},
                       {"c0", rat_to_json(g.c0)},
                       {"matrix", matrix_to_json(g.matrix)},
                       {"operator", g.operator_text},
                       {"phi", phi_to_json(g.phi)},
                       {"eta", factors_to_json(g.eta)},
                       {"provenance", g.provenance}});
  }
  return Json{{"format", "dnmod-golden/1"}, {"cases", arr}};
}

std::vector<UniformizerFixture> parse_uniformizers(const Json& j) {
  return guarded("uniformizer fixtures", [&] {
    std::vector<UniformizerFixture> out;
    for (const auto& r : j.at("recipes")) {
      UniformizerFixture u;
      u.level = r.at("level").get<unsigned>();
      u.recipe = recipe_from_json(r.at("recipe"));
      u.c0 = rat_from_json(r.at("c0"));
      u.provenance = r.at("provenance").get<std::string>();
      out.push_back(std::move(u));
    }
    return out;
  });
}

Json uniformizers_to_json(const std::vector<UniformizerFixture>& recipes) {
  Json arr = Json::array();
  for (const auto& u : recipes) {
    arr.push_back(Json{{"level", u.level},
                       {"recipe", recipe_to_json(u.recipe)},
                       {"c0", rat_to_json(u.c0)},
                       {"provenance", u.provenance}});
  }
  return Json{{"format", "dnmod-uniformizers/1"}, {"recipes", arr}};
}

std::string dump_fixture(const Json& j) { return j.dump(2) + "\n"; }

Catalog Catalog::load(const std::string& dir) {
  return Catalog(parse_golden(read_json_file(dir + "/golden.json")),
                 parse_uniformizers(read_json_file(dir + "/uniformizers.json")));
}

Catalog::Catalog(std::vector<GoldenFixture> cases, std::vector<UniformizerFixture> recipes)
    : cases_(std::move(cases)), recipes_(std::move(recipes)) {
  std::sort(cases_.begin(), cases_.end(), [](const auto& a, const auto& b) { return a.pair < b.pair; });
}

const GoldenFixture& Catalog::golden(Pair p) const {
  for (const auto& g : cases_)
    if (g.pair == p) return g;
  throw Error(Errc::UnsupportedPair, "(" + std::to_string(p.level) + "," + std::to_string(p.index) + ")");
}

const UniformizerFixture& Catalog::uniformizer(unsigned level) const {
  for (const auto& u : recipes_)
    if (u.level == level) return u;
  throw Error(Errc::UnsupportedLevel, "no uniformizer recipe for level " + std::to_string(level));
}

ModularCase Catalog::modular_case(Pair p) const { return modular_case(p, golden(p).c0); }

ModularCase Catalog::modular_case(Pair p, const Rat& c0) const {
  const GoldenFixture& g = golden(p);
  const UniformizerFixture& u = uniformizer(p.level);
  ModularCase mc;
  mc.level = p.level;
  mc.index = p.index;
  mc.uniformizer = UniformizerSpec{p.level, u.recipe, c0};
  mc.phi = g.phi;
  return mc;
}

std::vector<Pair> Catalog::pairs() const {
  std::vector<Pair> out;
  for (const auto& g : cases_) out.push_back(g.pair);
  return out;
}

}  // namespace dnmod
