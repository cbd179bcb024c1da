#include <doctest.h>

#include <fstream>
#include <sstream>

#include "dnmod/error.hpp"
#include "dnmod/fixtures.hpp"
#include "dnmod/json_io.hpp"

using namespace dnmod;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("fixture files round-trip byte for byte") {
  const std::string dir = data_dir();
  const std::string golden = slurp(dir + "/golden.json");
  CHECK(dump_fixture(golden_to_json(parse_golden(Json::parse(golden)))) == golden);
  const std::string unif = slurp(dir + "/uniformizers.json");
  CHECK(dump_fixture(uniformizers_to_json(parse_uniformizers(Json::parse(unif)))) == unif);
  const std::string rel = slurp(dir + "/pipeline_relation.json");
  CHECK(dump_fixture(Json::parse(rel)) == rel);
}

TEST_CASE("catalog consistency") {
  const Catalog cat = Catalog::load();
  CHECK(cat.cases().size() == 17);
  const auto pairs = cat.pairs();
  CHECK(std::set<Pair>(pairs.begin(), pairs.end()) == published_pairs());
  for (const auto& g : cat.cases()) {
    CAPTURE(g.pair.level);
    CAPTURE(g.pair.index);
    CHECK(g.provenance == "transcribed");
    CHECK(g.c0 == cat.uniformizer(g.pair.level).c0);
    // The constant is a11 of the d = 1 matrix of the same level.
    CHECK(g.c0 == cat.golden({g.pair.level, 1}).matrix.at(1, 1));
    CHECK(g.eta.size() == 2);
    CHECK(g.eta[0].multiplier == g.pair.index);
    CHECK(g.eta[1].multiplier == g.pair.index * g.pair.level);
    CHECK_NOTHROW(parse_operator(g.operator_text));
  }
  CHECK_THROWS_AS(cat.golden({9, 9}), Error);
  CHECK_THROWS_AS(cat.uniformizer(13), Error);
}

TEST_CASE("json encodings") {
  CHECK(rat_to_json(Rat(-3, 4)) == Json("-3/4"));
  CHECK(rat_from_json(Json(5)) == Rat(5));
  CHECK_THROWS_AS(rat_from_json(Json(1.5)), Error);

  const FracSeries s(Rat(1, 4), RatSeries(std::vector<Rat>{Rat(1), Rat(-2), Rat(1, 3)}));
  const Json js = series_to_json(s);
  CHECK(js.at("offset") == "1/4");
  CHECK(js.at("prec") == 3);
  CHECK(series_from_json(js) == s);

  const WeylOp op = parse_operator("D^3-8*t*(1+2*D)^3+t^-1/2");
  CHECK(operator_from_json(operator_to_json(op)) == op);
  CHECK(operator_to_json(parse_operator("t*(D+2)")).dump() == R"({"terms":[{"dpoly":["2","1"],"tdeg":1}]})");

  const DNMatrix a = DNMatrix::d3(Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6));
  CHECK(matrix_from_json(matrix_to_json(a)) == a);
  const Json partial = Json::parse(R"({"N": 3, "a": {"0,0": "24", "01": 3888, "13": "7"}})");
  const DNMatrix m = matrix_from_json(partial);
  CHECK(m.at(3, 3) == Rat(24));
  CHECK(m.at(2, 3) == Rat(3888));
  CHECK(m.at(0, 2) == Rat(7));
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"N": 3, "a": {"31": "1"}})")), Error);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"N": 3, "a": {"02": "1", "13": "2"}})")), Error);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"a": {}})")), Error);

  PhiSpec phi;
  phi.combo.terms = {{1, Rat(5)}, {6, Rat(-5)}};
  CHECK(phi_from_json(phi_to_json(phi)) == phi);
  PhiSpec sq;
  sq.sqrt_e4 = true;
  CHECK(phi_from_json(phi_to_json(sq)) == sq);
}

TEST_CASE("malformed fixtures raise ParseError") {
  try {
    parse_golden(Json::parse(R"({"cases": [{"pair": [2]}]})"));
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
  try {
    read_json_file("/nonexistent/file.json");
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
}
