#pragma once

#include <map>
#include <string>
#include <vector>

#include "dnmod/classify.hpp"
#include "dnmod/modular.hpp"
#include "dnmod/json_io.hpp"
#include "dnmod/weyl.hpp"

namespace dnmod {

/// One row of the published tables, kept as data.
struct GoldenFixture {
  Pair pair;
  Rat c0;
  DNMatrix matrix;
  /// Operator exactly as written in the table; parse_operator reads it.
  std::string operator_text;
  PhiSpec phi;
  /// I = prod H_j^e for these factors.
  std::vector<EtaFactor> eta;
  std::string provenance;
};

struct UniformizerFixture {
  unsigned level = 0;
  EtaQuotientRecipe recipe;
  /// q^0 coefficient of T^{-1}.
  Rat c0;
  std::string provenance;
};

/// DNMOD_DATA_DIR if set, else the directory configured at build time.
std::string data_dir();

std::vector<GoldenFixture> parse_golden(const Json& j);
Json golden_to_json(const std::vector<GoldenFixture>& cases);
std::vector<UniformizerFixture> parse_uniformizers(const Json& j);
Json uniformizers_to_json(const std::vector<UniformizerFixture>& recipes);

/// Canonical text form of fixture JSON: two-space indent, trailing newline.
std::string dump_fixture(const Json& j);

/// Golden cases and uniformizer recipes loaded together.
class Catalog {
 public:
  static Catalog load(const std::string& dir = data_dir());
  Catalog(std::vector<GoldenFixture> cases, std::vector<UniformizerFixture> recipes);

  const std::vector<GoldenFixture>& cases() const noexcept { return cases_; }
  const std::vector<UniformizerFixture>& recipes() const noexcept { return recipes_; }
  /// Throws UnsupportedPair.
  const GoldenFixture& golden(Pair p) const;
  /// Throws UnsupportedLevel.
  const UniformizerFixture& uniformizer(unsigned level) const;
  /// Golden case with its uniformizer; c0 defaults to the fixture value.
  ModularCase modular_case(Pair p) const;
  ModularCase modular_case(Pair p, const Rat& c0) const;
  std::vector<Pair> pairs() const;

 private:
  std::vector<GoldenFixture> cases_;
  std::vector<UniformizerFixture> recipes_;
};

}  // namespace dnmod
