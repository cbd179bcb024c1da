#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

#include "dnmod/classify.hpp"
#include "dnmod/curvature.hpp"
#include "dnmod/error.hpp"
#include "dnmod/fixtures.hpp"
#include "dnmod/pfit.hpp"
#include "dnmod/verify.hpp"

using namespace dnmod;

namespace {

struct Globals {
  std::size_t terms = kDefaultPrecision;
  std::string format = "json";
  unsigned jobs = 1;
  bool table() const { return format == "table"; }
};

Pair parse_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--pair", "expected N,d");
  try {
    const long n = std::stol(s.substr(0, comma));
    const long d = std::stol(s.substr(comma + 1));
    if (n < 1 || d < 1) throw CLI::ValidationError("--pair", "N and d must be positive");
    return {static_cast<unsigned>(n), static_cast<unsigned>(d)};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--pair", "expected N,d");
  }
}

std::string pair_str(Pair p) { return "(" + std::to_string(p.level) + "," + std::to_string(p.index) + ")"; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void print_matrix(const DNMatrix& a) {
  std::vector<std::vector<std::string>> cells(a.order() + 1, std::vector<std::string>(a.order() + 1, "0"));
  std::size_t width = 1;
  for (unsigned i = 0; i <= a.order(); ++i)
    for (unsigned j = i; j <= a.order(); ++j) {
      cells[i][j] = a.at(i, j).str();
      width = std::max(width, cells[i][j].size());
    }
  for (const auto& row : cells) {
    std::cout << "  ";
    for (const auto& c : row) std::cout << std::setw(static_cast<int>(width) + 2) << c;
    std::cout << "\n";
  }
}

int cmd_verify(const Globals& g, bool all, const std::string& pair, bool nilpotence) {
  const Catalog catalog = Catalog::load();
  std::vector<Pair> pairs;
  if (all) {
    pairs = catalog.pairs();
  } else {
    pairs.push_back(parse_pair(pair));
  }
  VerifyOptions opts;
  opts.terms = g.terms;
  opts.jobs = g.jobs;
  opts.nilpotence = nilpotence;
  const auto reports = verify_pairs(catalog, pairs, opts);
  const Json j = report_to_json(reports);
  if (g.table()) {
    for (const auto& r : reports) {
      std::cout << std::left << std::setw(8) << pair_str(r.pair) << (r.ok() ? "pass" : "FAIL");
      for (const auto& c : r.checks) std::cout << "  " << c.name << "=" << (c.pass ? "ok" : "FAIL");
      std::cout << "\n";
      for (const auto& c : r.checks)
        if (!c.pass) std::cout << "    " << c.name << ": " << c.detail << "\n";
      if (!r.error.empty()) std::cout << "    error: " << r.error << "\n";
      if (r.recovered && (!r.ok() || reports.size() == 1)) print_matrix(*r.recovered);
    }
    std::cout << j.at("summary").get<std::string>() << "\n";
  } else {
    emit(j);
  }
  return j.at("ok").get<bool>() ? 0 : 1;
}

int cmd_recover(const Globals& g, const std::string& pair, const std::string& c0_text, bool auto_mode) {
  const Catalog catalog = Catalog::load();
  const Pair p = parse_pair(pair);
  const ModularCase mc =
      c0_text.empty() ? catalog.modular_case(p) : catalog.modular_case(p, Rat::parse(c0_text));

  if (auto_mode) {
    const AutoC0Result r = auto_c0(mc, std::min<std::size_t>(g.terms, 24), g.terms);
    Json cands = Json::array(), ver = Json::array();
    for (const auto& c : r.candidates) cands.push_back(rat_to_json(c));
    for (const auto& c : r.verified) ver.push_back(rat_to_json(c));
    Json poly = Json::array();
    for (const auto& c : r.consistency.coeffs()) poly.push_back(rat_to_json(c));
    const Json j{{"pair", Json::array({p.level, p.index})},
                 {"reference_c0", rat_to_json(r.reference_c0)},
                 {"consistency_in_delta", poly},
                 {"degenerate", r.degenerate},
                 {"candidates", cands},
                 {"verified", ver}};
    if (g.table()) {
      std::cout << "pair " << pair_str(p) << "  reference c0 = " << r.reference_c0 << "\n"
                << "consistency polynomial in delta: " << r.consistency.str("delta") << "\n"
                << "candidates:";
      for (const auto& c : r.candidates) std::cout << " " << c;
      std::cout << "\nverified:";
      for (const auto& c : r.verified) std::cout << " " << c;
      std::cout << "\n";
    } else {
      emit(j);
    }
    return 0;
  }

  const Recovery r = recover(mc, g.terms);
  if (g.table()) {
    std::cout << "pair " << pair_str(p) << "  c0 = " << mc.uniformizer.c0 << "\n";
    print_matrix(r.matrix);
    std::cout << "operator: " << r.op.str() << "\n";
  } else {
    emit(Json{{"pair", Json::array({p.level, p.index})},
              {"c0", rat_to_json(mc.uniformizer.c0)},
              {"matrix", matrix_to_json(r.matrix)},
              {"operator", r.op.str()},
              {"residuals", "all-zero"}});
  }
  return 0;
}

int cmd_dn(const Globals& g, const std::string& path) {
  const DNMatrix a = matrix_from_json(read_json_file(path));
  const WeylOp op = dn_build(a);
  if (g.table()) {
    std::cout << op.str() << "\n";
  } else {
    emit(Json{{"operator", op.str()}});
  }
  return 0;
}


int cmd_qexp(const Globals& g, const std::string& object, const std::string& pair, unsigned j) {
  FracSeries s;
  if (object == "eta") {
    s = eta_H(j, g.terms);
  } else if (object == "E2") {
    s = FracSeries(Rat(0), eisenstein_E2(j, g.terms));
  } else if (object == "E4") {
    s = FracSeries(Rat(0), eisenstein_E4(g.terms));
  } else if (object == "j") {
    s = j_invariant(g.terms);
  } else {
    if (pair.empty()) throw CLI::ValidationError("--pair", "required for --object " + object);
    const Catalog catalog = Catalog::load();
    const ModularCase mc = catalog.modular_case(parse_pair(pair));
    if (object == "Tinv") {
      s = uniformizer_inv(mc.uniformizer, g.terms);
    } else if (object == "T") {
      s = FracSeries(Rat(0), coordinates(mc.uniformizer, mc.index, g.terms).T_of_q);
    } else if (object == "t") {
      s = FracSeries(Rat(0), coordinates(mc.uniformizer, mc.index, g.terms).t_of_Q);
    } else if (object == "Q") {
      s = FracSeries(Rat(0), coordinates(mc.uniformizer, mc.index, g.terms).Q_of_t);
    } else if (object == "Phi") {
      s = FracSeries(Rat(0), phi_in_Q(mc, g.terms));
    } else if (object == "Phi_t") {
      s = FracSeries(Rat(0), phi_in_t(mc, g.terms));
    } else if (object == "I") {
      s = i_function(mc, g.terms);
    } else {
      throw CLI::ValidationError("--object", "unknown object " + object);
    }
  }
  s = FracSeries(s.offset(), s.body().truncated(std::min(g.terms, s.prec())));
  if (g.table()) {
    std::cout << "x^(" << s.offset() << ") * (";
    for (std::size_t i = 0; i < s.prec(); ++i) std::cout << (i ? ", " : "") << s.body()[i];
    std::cout << " + O(x^" << s.prec() << "))\n";
  } else {
    emit(series_to_json(s));
  }
  return 0;
}

int cmd_classify(const Globals& g, unsigned nmax, unsigned dmax) {
  const auto pairs = necessary_pairs(nmax, dmax);
  const auto published = published_pairs();
  if (g.table()) {
    std::cout << std::left << std::setw(8) << "pair" << std::setw(6) << "g" << std::setw(6) << "nu2" << std::setw(6)
              << "nu3" << std::setw(8) << "nu_inf" << "\n";
    for (const auto& p : pairs) {
      const auto inv = invariants(p.level);
      std::cout << std::setw(8) << pair_str(p) << std::setw(6) << inv.genus << std::setw(6) << inv.nu2
                << std::setw(6) << inv.nu3 << std::setw(8) << inv.nu_inf << "\n";
    }
    std::cout << pairs.size() << " pairs" << (pairs == published ? ", equal to the published list" : "") << "\n";
  } else {
    Json arr = Json::array();
    for (const auto& p : pairs) arr.push_back(Json::array({p.level, p.index}));
    emit(Json{{"nmax", nmax}, {"dmax", dmax}, {"pairs", arr}, {"count", pairs.size()},
              {"matches_published", pairs == published}});
  }
  return 0;
}

int cmd_nilpotence(const Globals& g, const std::string& pair, const std::string& op_text, std::uint64_t lo,
                   std::uint64_t hi) {
  WeylOp op;
  if (!op_text.empty()) {
    op = parse_operator(op_text);
  } else if (!pair.empty()) {
    op = parse_operator(Catalog::load().golden(parse_pair(pair)).operator_text);
  } else {
    throw CLI::ValidationError("nilpotence", "give --pair or --operator");
  }
  const NilpotenceReport rep = nilpotence_report(op, lo, hi);
  const char* verdict =
      rep.consistent_with_global_nilpotence ? "consistent with global nilpotence" : "not globally nilpotent";
  if (g.table()) {
    std::cout << "operator: " << op.str() << "\n";
    for (const auto& [p, s] : rep.primes) {
      std::cout << std::setw(6) << p << "  " << prime_status_name(s);
      if (s == PrimeStatus::BadPrime) std::cout << "  (" << rep.bad_reasons.at(p) << ")";
      std::cout << "\n";
    }
    std::cout << verdict << "\n";
  } else {
    Json primes = Json::object();
    for (const auto& [p, s] : rep.primes) primes[std::to_string(p)] = std::string(prime_status_name(s));
    emit(Json{{"operator", op.str()}, {"primes", primes}, {"verdict", verdict}});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of D3 modular differential equations"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--terms", g.terms, "Series precision")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);

  bool all = false, nil = true, auto_mode = false;
  std::string pair, c0, matrix_path, object, op_text;
  unsigned j = 1, nmax = 200, dmax = 6;
  std::uint64_t plo = 5, phi = 43;

  auto* verify = app.add_subcommand("verify", "Check golden pairs against the tables");
  auto* v_all = verify->add_flag("--all", all, "Every golden pair");
  verify->add_option("--pair", pair, "N,d")->excludes(v_all);
  verify->add_flag("!--no-nilpotence", nil, "Skip the p-curvature sweep");

  auto* recover_cmd = app.add_subcommand("recover", "Fit the D3 operator and extract its matrix");
  recover_cmd->add_option("--pair", pair, "N,d")->required();
  recover_cmd->add_option("--c0", c0, "Uniformizer constant (default: table value)");
  recover_cmd->add_flag("--auto-c0", auto_mode, "Search for consistent constants");

  auto* dn = app.add_subcommand("dn", "Build the DN operator of a matrix");
  dn->add_option("--matrix", matrix_path, "Matrix JSON file")->required()->check(CLI::ExistingFile);

  auto* qexp = app.add_subcommand("qexp", "Print a q-expansion");
  qexp->add_option("--object", object, "eta|E2|E4|j|Tinv|T|t|Q|Phi|Phi_t|I")
      ->required()
      ->check(CLI::IsMember({"eta", "E2", "E4", "j", "Tinv", "T", "t", "Q", "Phi", "Phi_t", "I"}));
  qexp->add_option("--pair", pair, "N,d");
  qexp->add_option("--index", j, "j for eta and E2")->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "Pairs passing the necessary conditions");
  classify->add_option("--nmax", nmax, "Largest level")->check(CLI::Range(1u, 100000u));
  classify->add_option("--dmax", dmax, "Largest index")->check(CLI::Range(1u, 1000u));

  auto* nilpotence = app.add_subcommand("nilpotence", "p-curvature sweep");
  nilpotence->add_option("--pair", pair, "Golden pair N,d");
  nilpotence->add_option("--operator", op_text, "Operator text, e.g. \"D^3-8*t*(1+2*D)^3\"");
  nilpotence->add_option("--plo", plo, "Smallest prime");
  nilpotence->add_option("--phi", phi, "Largest prime");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      if (!all && pair.empty()) throw CLI::ValidationError("verify", "give --all or --pair N,d");
      return cmd_verify(g, all, pair, nil);
    }
    if (*recover_cmd) return cmd_recover(g, pair, c0, auto_mode);
    if (*dn) return cmd_dn(g, matrix_path);
    if (*qexp) return cmd_qexp(g, object, pair, j);
    if (*classify) return cmd_classify(g, nmax, dmax);
    if (*nilpotence) return cmd_nilpotence(g, pair, op_text, plo, phi);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
