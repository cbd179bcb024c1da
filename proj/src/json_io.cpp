#include "dnmod/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "dnmod/error.hpp"

namespace dnmod {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::pair<unsigned, unsigned> matrix_key(const std::string& key) {
  unsigned i = 0, j = 0;
  const auto comma = key.find(',');
  try {
    if (comma != std::string::npos) {
      i = static_cast<unsigned>(std::stoul(key.substr(0, comma)));
      j = static_cast<unsigned>(std::stoul(key.substr(comma + 1)));
    } else if (key.size() == 2 && std::isdigit(static_cast<unsigned char>(key[0])) &&
               std::isdigit(static_cast<unsigned char>(key[1]))) {
      i = static_cast<unsigned>(key[0] - '0');
      j = static_cast<unsigned>(key[1] - '0');
    } else {
      bad("matrix key \"" + key + "\"");
    }
  } catch (const std::logic_error&) {
    bad("matrix key \"" + key + "\"");
  }
  return {i, j};
}

}  // namespace

Json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  bad("expected a rational string, got " + j.dump());
}

Json series_to_json(const RatSeries& s) { return series_to_json(FracSeries(Rat(0), s)); }

Json series_to_json(const FracSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.body().coeffs()) coeffs.push_back(rat_to_json(c));
  return Json{{"offset", rat_to_json(s.offset())}, {"prec", s.prec()}, {"coeffs", coeffs}};
}

FracSeries series_from_json(const Json& j) {
  const Rat offset = j.contains("offset") ? rat_from_json(j.at("offset")) : Rat(0);
  std::vector<Rat> c;
  for (const auto& v : field(j, "coeffs")) c.push_back(rat_from_json(v));
  if (j.contains("prec")) {
    const auto prec = j.at("prec").get<std::size_t>();
    if (prec < c.size()) bad("prec smaller than the coefficient list");
    c.resize(prec);
  }
  return FracSeries(offset, RatSeries(std::move(c)));
}

Json operator_to_json(const WeylOp& op) {
  Json terms = Json::array();
  for (const auto& [k, p] : op.terms()) {
    Json dp = Json::array();
    for (const auto& c : p.coeffs()) dp.push_back(rat_to_json(c));
    terms.push_back(Json{{"tdeg", k}, {"dpoly", dp}});
  }
  return Json{{"terms", terms}};
}

WeylOp operator_from_json(const Json& j) {
  WeylOp op;
  for (const auto& t : field(j, "terms")) {
    std::vector<Rat> c;
    for (const auto& v : field(t, "dpoly")) c.push_back(rat_from_json(v));
    op += WeylOp::term(field(t, "tdeg").get<long>(), RatPoly(std::move(c)));
  }
  return op;
}

Json matrix_to_json(const DNMatrix& a) {
  Json entries = Json::object();
  const bool wide = a.order() >= 10;
  for (const auto& [ij, v] : a.entries()) {
    const std::string key = wide ? std::to_string(ij.first) + "," + std::to_string(ij.second)
                                 : std::to_string(ij.first) + std::to_string(ij.second);
    entries[key] = rat_to_json(v);
  }
  return Json{{"N", a.order()}, {"a", entries}};
}

DNMatrix matrix_from_json(const Json& j) {
  const auto n = field(j, "N").get<unsigned>();
  std::map<std::pair<unsigned, unsigned>, Rat> entries;
  for (const auto& [key, v] : field(j, "a").items()) {
    const auto ij = matrix_key(key);
    if (ij.first > ij.second || ij.second > n) bad("matrix key \"" + key + "\" outside the upper triangle");
    entries[ij] = rat_from_json(v);
  }
  return DNMatrix(n, entries);
}

Json recipe_to_json(const EtaQuotientRecipe& r) {
  if (r.j_function) return Json{{"j_function", true}};
  Json terms = Json::array();
  for (const auto& t : r.terms) {
    Json factors = Json::array();
    for (const auto& f : t.factors) factors.push_back(Json::array({f.multiplier, f.exponent}));
    terms.push_back(Json{{"scale", rat_to_json(t.scale)}, {"factors", factors}});
  }
  return Json{{"terms", terms}};
}

EtaQuotientRecipe recipe_from_json(const Json& j) {
  EtaQuotientRecipe r;
  if (j.value("j_function", false)) {
    r.j_function = true;
    return r;
  }
  for (const auto& t : field(j, "terms")) {
    EtaTerm term;
    term.scale = rat_from_json(field(t, "scale"));
    for (const auto& f : field(t, "factors")) {
      if (!f.is_array() || f.size() != 2) bad("eta factor must be [multiplier, exponent]");
      term.factors.push_back(EtaFactor{f[0].get<unsigned>(), f[1].get<int>()});
    }
    r.terms.push_back(std::move(term));
  }
  return r;
}

Json phi_to_json(const PhiSpec& p) {
  if (p.sqrt_e4) return Json{{"sqrt_e4", true}};
  Json combo = Json::array();
  for (const auto& [jj, e] : p.combo.terms) combo.push_back(Json::array({jj, rat_to_json(e)}));
  return Json{{"combo", combo}};
}

PhiSpec phi_from_json(const Json& j) {
  PhiSpec p;
  if (j.value("sqrt_e4", false)) {
    p.sqrt_e4 = true;
    return p;
  }
  for (const auto& t : field(j, "combo")) {
    if (!t.is_array() || t.size() != 2) bad("combo entry must be [j, coefficient]");
    p.combo.terms.emplace_back(t[0].get<unsigned>(), rat_from_json(t[1]));
  }
  return p;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

}  // namespace dnmod
