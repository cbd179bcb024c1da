#include "dnmod/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "dnmod/error.hpp"

namespace dnmod {

// ---------------------------------------------------------------- WeylOp

WeylOp::WeylOp(Terms terms) : terms_(std::move(terms)) { drop_zeros(); }

WeylOp::WeylOp(const Rat& c) {
  if (!c.is_zero()) terms_.emplace(0, DPoly(c));
}

WeylOp WeylOp::D() { return term(0, RatPoly::x()); }

WeylOp WeylOp::t(long power) { return term(power, DPoly(Rat(1))); }

WeylOp WeylOp::term(long k, DPoly p) {
  Terms terms;
  if (!p.is_zero()) terms.emplace(k, std::move(p));
  return WeylOp(std::move(terms));
}

void WeylOp::drop_zeros() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

DPoly WeylOp::coeff(long k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? DPoly() : it->second;
}

long WeylOp::min_tdeg() const { return terms_.empty() ? 0 : terms_.begin()->first; }
long WeylOp::max_tdeg() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

long WeylOp::order() const {
  long n = -1;
  for (const auto& [k, p] : terms_) n = std::max(n, p.degree());
  return n;
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
  for (const auto& [k, p] : o.terms_) terms_[k] += p;
  drop_zeros();
  return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
  for (const auto& [k, p] : o.terms_) terms_[k] -= p;
  drop_zeros();
  return *this;
}

WeylOp& WeylOp::operator*=(const Rat& s) {
  for (auto& [k, p] : terms_) p *= s;
  drop_zeros();
  return *this;
}

WeylOp operator*(const WeylOp& a, const WeylOp& b) {
  // (t^i p(D)) (t^j q(D)) = t^{i+j} p(D + j) q(D).
  WeylOp::Terms out;
  for (const auto& [i, p] : a.terms_) {
    for (const auto& [j, q] : b.terms_) out[i + j] += p.shifted(Rat(j)) * q;
  }
  return WeylOp(std::move(out));
}

WeylOp weyl_mul(const WeylOp& a, const WeylOp& b) { return a * b; }

std::string WeylOp::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, p] : terms_) {
    std::string tpart;
    if (k == 1) {
      tpart = "t";
    } else if (k != 0) {
      tpart = "t^" + std::to_string(k);
    }
    std::string body = p.str("D");
    std::string piece;
    if (tpart.empty()) {
      piece = body;
    } else if (p.degree() == 0) {
      const Rat c = p[0];
      if (c == Rat(1)) {
        piece = tpart;
      } else if (c == Rat(-1)) {
        piece = "-" + tpart;
      } else {
        piece = c.str() + "*" + tpart;
      }
    } else if (std::count_if(p.coeffs().begin(), p.coeffs().end(),
                             [](const Rat& c) { return !c.is_zero(); }) == 1) {
      const int j = p.degree();
      const Rat c = p[j];
      const std::string mono = j == 1 ? "D" : "D^" + std::to_string(j);
      if (c == Rat(1)) {
        piece = tpart + "*" + mono;
      } else if (c == Rat(-1)) {
        piece = "-" + tpart + "*" + mono;
      } else {
        piece = c.str() + "*" + tpart + "*" + mono;
      }
    } else {
      // Pull a leading minus sign out so that "-t*(...)" reads naturally.
      if (p.leading().sign() < 0) {
        piece = "-" + tpart + "*(" + (-p).str("D") + ")";
      } else {
        piece = tpart + "*(" + body + ")";
      }
    }
    if (!out.empty() && piece.front() != '-') out += "+";
    out += piece;
  }
  return out;
}

// ---------------------------------------------------------------- parser

namespace {

class OperatorParser {
 public:
  explicit OperatorParser(std::string_view text) : s_(text) {}

  WeylOp parse() {
    WeylOp v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError, what + " at offset " + std::to_string(pos_) + " in '" +
                                      std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  WeylOp expr() {
    WeylOp acc;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  WeylOp term() {
    WeylOp acc = power();
    while (true) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        const Rat d = integer_literal();
        if (d.is_zero()) fail("division by zero");
        acc = acc * (Rat(1) / d);
      } else {
        break;
      }
    }
    return acc;
  }

  WeylOp power() {
    WeylOp base = primary();
    if (accept('^')) {
      const bool negative = accept('-');
      if (negative && base != WeylOp::t()) fail("negative exponent on a base other than t");
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const auto e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (negative) return WeylOp::t(-static_cast<int>(e));
      WeylOp r(Rat(1));
      for (unsigned long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Rat integer_literal() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Rat::parse(s_.substr(start, pos_ - start));
  }

  WeylOp primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      WeylOp v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == 't') {
      ++pos_;
      return WeylOp::t();
    }
    if (c == 'D') {
      ++pos_;
      return WeylOp::D();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return WeylOp(integer_literal());
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

WeylOp parse_operator(std::string_view text) { return OperatorParser(text).parse(); }

// ---------------------------------------------------------------- A1Op

A1Op::A1Op(Terms terms) : terms_(std::move(terms)) { drop_zeros(); }

A1Op A1Op::t(long power) { return A1Op(Terms{{{power, 0}, Rat(1)}}); }
A1Op A1Op::d(long power) { return A1Op(Terms{{{0, power}, Rat(1)}}); }
A1Op A1Op::constant(const Rat& c) { return A1Op(Terms{{{0, 0}, c}}); }

void A1Op::drop_zeros() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

A1Op& A1Op::operator+=(const A1Op& o) {
  for (const auto& [k, c] : o.terms_) terms_[k] += c;
  drop_zeros();
  return *this;
}

A1Op& A1Op::operator*=(const Rat& s) {
  for (auto& [k, c] : terms_) c *= s;
  drop_zeros();
  return *this;
}

namespace {

Int binomial(long n, long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int falling(long n, long k) {
  Int r = 1;
  for (long i = 0; i < k; ++i) r *= n - i;
  return r;
}

// Stirling numbers of the second kind S(n, j), 0 <= j <= n.
std::vector<Rat> stirling2_row(long n) {
  std::vector<std::vector<Int>> s(static_cast<std::size_t>(n + 1));
  s[0] = {Int(1)};
  for (long i = 1; i <= n; ++i) {
    auto& row = s[static_cast<std::size_t>(i)];
    const auto& prev = s[static_cast<std::size_t>(i - 1)];
    row.assign(static_cast<std::size_t>(i + 1), Int(0));
    for (long j = 1; j <= i; ++j) {
      Int v = (j - 1 < static_cast<long>(prev.size())) ? prev[static_cast<std::size_t>(j - 1)] : Int(0);
      if (j < static_cast<long>(prev.size())) v += Int(j) * prev[static_cast<std::size_t>(j)];
      row[static_cast<std::size_t>(j)] = v;
    }
  }
  std::vector<Rat> out;
  for (const auto& v : s[static_cast<std::size_t>(n)]) out.emplace_back(v);
  return out;
}

}  // namespace

A1Op operator*(const A1Op& a, const A1Op& b) {
  // t^i d^j t^k d^l = sum_m C(j, m) k!/(k-m)! t^{i+k-m} d^{j+l-m}.
  A1Op::Terms out;
  for (const auto& [ij, c1] : a.terms_) {
    const auto [i, j] = ij;
    for (const auto& [kl, c2] : b.terms_) {
      const auto [k, l] = kl;
      const Rat c = c1 * c2;
      for (long m = 0; m <= std::min(j, k); ++m)
        out[{i + k - m, j + l - m}] += c * Rat(Int(binomial(j, m) * falling(k, m)));
    }
  }
  return A1Op(std::move(out));
}

A1Op to_ddt(const WeylOp& op) {
  A1Op::Terms out;
  for (const auto& [k, p] : op.terms()) {
    if (k < 0) throw Error(Errc::InvalidArgument, "to_ddt needs nonnegative t-degrees");
    for (long n = 0; n <= p.degree(); ++n) {
      if (p[static_cast<std::size_t>(n)].is_zero()) continue;
      const auto s = stirling2_row(n);
      for (long j = 0; j <= n; ++j) out[{k + j, j}] += p[static_cast<std::size_t>(n)] * s[static_cast<std::size_t>(j)];
    }
  }
  return A1Op(std::move(out));
}

WeylOp from_ddt(const A1Op& op) {
  WeylOp acc;
  for (const auto& [ij, c] : op.terms()) {
    const auto [i, j] = ij;
    DPoly fall(Rat(1));
    for (long m = 0; m < j; ++m) fall = fall * RatPoly::linear(Rat(-m));
    acc += WeylOp::term(i - j, fall * c);
  }
  return acc;
}

A1Op fourier(const A1Op& op) {
  A1Op acc;
  for (const auto& [ij, c] : op.terms()) {
    const auto [i, j] = ij;
    const Rat sign = (j % 2) ? Rat(-1) : Rat(1);
    acc += (A1Op::d(i) * A1Op::t(j)) * (c * sign);
  }
  return acc;
}

// ---------------------------------------------------------------- analyses

WeylOp strip_left_D(const WeylOp& op) {
  // D t^k q(D) = t^k (D + k) q(D).
  WeylOp::Terms out;
  for (const auto& [k, p] : op.terms()) {
    auto [q, r] = RatPoly::divmod(p, RatPoly::linear(Rat(k)));
    if (!r.is_zero())
      throw Error(Errc::NotLeftDivisibleByD, "t^" + std::to_string(k) + " coefficient " + p.str("D"));
    out.emplace(k, std::move(q));
  }
  return WeylOp(std::move(out));
}

WeylOp strip_left_t(const WeylOp& op) {
  if (!op.is_zero() && op.min_tdeg() < 1)
    throw Error(Errc::NotLeftDivisibleByT, "operator has a t-degree " + std::to_string(op.min_tdeg()) + " term");
  WeylOp::Terms out;
  for (const auto& [k, p] : op.terms()) out.emplace(k - 1, p);
  return WeylOp(std::move(out));
}

FracSeries weyl_apply(const WeylOp& op, const FracSeries& s) {
  const std::size_t prec = s.prec();
  if (op.is_zero()) return FracSeries(s.offset(), RatSeries::zero(prec));
  const long kmin = std::min(0L, op.min_tdeg());
  std::vector<Rat> out(prec);
  for (const auto& [k, p] : op.terms()) {
    for (std::size_t m = 0; m < prec; ++m) {
      const long idx = static_cast<long>(m) + k - kmin;
      if (idx >= static_cast<long>(prec)) break;
      if (s.body()[m].is_zero()) continue;
      out[static_cast<std::size_t>(idx)] += p.eval(s.offset() + Rat(static_cast<long>(m))) * s.body()[m];
    }
  }
  return FracSeries(s.offset() + Rat(kmin), RatSeries(std::move(out)));
}

RatSeries weyl_apply(const WeylOp& op, const RatSeries& s) {
  if (!op.is_zero() && op.min_tdeg() < 0)
    throw Error(Errc::InvalidArgument, "Laurent operator applied to a power series");
  const std::size_t prec = s.prec();
  std::vector<Rat> out(prec);
  for (const auto& [k, p] : op.terms()) {
    for (std::size_t m = 0; m + static_cast<std::size_t>(k) < prec; ++m) {
      if (s[m].is_zero()) continue;
      out[m + static_cast<std::size_t>(k)] += p.eval(Rat(static_cast<long>(m))) * s[m];
    }
  }
  return RatSeries(std::move(out));
}

WeylOp formal_adjoint(const WeylOp& op) {
  // p(-D) t^k = t^k p(-D - k).
  WeylOp::Terms out;
  for (const auto& [k, p] : op.terms()) out.emplace(k, p.scaled_arg(Rat(-1)).shifted(Rat(k)));
  return WeylOp(std::move(out));
}

DPoly indicial_at_zero(const WeylOp& op) { return op.coeff(0); }

RatPoly symbol_polynomial(const WeylOp& op) {
  const long n = op.order();
  if (n < 0) return {};
  std::vector<std::pair<long, Rat>> lead;
  for (const auto& [k, p] : op.terms())
    if (p.degree() == n) lead.emplace_back(k, p.leading());
  const long kmin = lead.front().first;
  std::vector<Rat> c(static_cast<std::size_t>(lead.back().first - kmin + 1));
  for (const auto& [k, v] : lead) c[static_cast<std::size_t>(k - kmin)] = v;
  return RatPoly(std::move(c));
}

SymbolRoots symbol_roots(const WeylOp& op) {
  SymbolRoots out;
  out.symbol = symbol_polynomial(op);
  out.factors = squarefree_decomposition(out.symbol);
  for (const auto& [m, f] : out.factors) {
    out.distinct_roots += f.degree();
    out.roots_with_multiplicity += static_cast<long>(m) * f.degree();
  }
  return out;
}

WeylOp right_det(const std::vector<std::vector<WeylOp>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return WeylOp(Rat(1));
  for (const auto& row : m)
    if (row.size() != n) throw Error(Errc::InvalidArgument, "right_det needs a square matrix");
  if (n == 1) return m[0][0];
  WeylOp acc;
  const std::size_t last = n - 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][last].is_zero()) continue;
    std::vector<std::vector<WeylOp>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k) continue;
      minor.emplace_back(m[r].begin(), m[r].begin() + static_cast<long>(last));
    }
    WeylOp term = m[k][last] * right_det(minor);
    if ((k + last) % 2) term = -term;
    acc += term;
  }
  return acc;
}

// ---------------------------------------------------------------- DNMatrix

DNMatrix::DNMatrix(unsigned order) : n_(order) {
  for (unsigned i = 0; i <= n_; ++i)
    for (unsigned j = i; j <= n_; ++j) a_[{i, j}] = Rat(0);
}

DNMatrix::DNMatrix(unsigned order, const std::map<std::pair<unsigned, unsigned>, Rat>& entries)
    : DNMatrix(order) {
  for (const auto& [ij, v] : entries) {
    const auto [i, j] = ij;
    if (i > j || j > n_)
      throw Error(Errc::InvalidArgument,
                  "entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside 0<=i<=j<=N");
  }
  for (unsigned i = 0; i <= n_; ++i) {
    for (unsigned j = i; j <= n_; ++j) {
      const std::pair<unsigned, unsigned> self{i, j}, mirror{n_ - j, n_ - i};
      const auto a = entries.find(self);
      const auto b = entries.find(mirror);
      if (a != entries.end() && b != entries.end() && a->second != b->second)
        throw Error(Errc::AsymmetricMatrix, "a" + std::to_string(i) + std::to_string(j) + " = " +
                                                a->second.str() + " but a" + std::to_string(n_ - j) +
                                                std::to_string(n_ - i) + " = " + b->second.str());
      if (a != entries.end()) {
        a_[self] = a->second;
      } else if (b != entries.end()) {
        a_[self] = b->second;
      }
    }
  }
}

DNMatrix DNMatrix::d3(const Rat& a00, const Rat& a01, const Rat& a02, const Rat& a03, const Rat& a11,
                      const Rat& a12) {
  return DNMatrix(3, {{{0, 0}, a00}, {{0, 1}, a01}, {{0, 2}, a02}, {{0, 3}, a03}, {{1, 1}, a11}, {{1, 2}, a12}});
}

const Rat& DNMatrix::at(unsigned i, unsigned j) const {
  const auto it = a_.find({i, j});
  if (it == a_.end())
    throw Error(Errc::InvalidArgument, "no entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return it->second;
}

DNMatrix class_shift(const DNMatrix& a, const Rat& shift) {
  auto e = a.entries();
  for (unsigned i = 0; i <= a.order(); ++i) e[{i, i}] += shift;
  return DNMatrix(a.order(), e);
}

DNMatrix normalize_class(const DNMatrix& a) { return class_shift(a, -a.at(0, 0)); }

bool same_class(const DNMatrix& a, const DNMatrix& b) {
  return a.order() == b.order() && normalize_class(a) == normalize_class(b);
}

WeylOp dn_build(const DNMatrix& a) {
  const unsigned n = a.order();
  const WeylOp dt = WeylOp::D() * WeylOp::t();
  std::vector<std::vector<WeylOp>> m(n + 1, std::vector<WeylOp>(n + 1));
  for (unsigned k = 0; k <= n; ++k) {
    for (unsigned l = 0; l <= n; ++l) {
      WeylOp entry;
      if (k == l + 1) {
        entry = WeylOp(Rat(1));
      } else if (k <= l && !a.at(k, l).is_zero()) {
        WeylOp p(Rat(1));
        for (unsigned e = 0; e < l - k + 1; ++e) p = p * dt;
        entry = p * a.at(k, l);
      }
      m[k][l] = (k == l ? WeylOp::D() : WeylOp()) - entry;
    }
  }
  return strip_left_D(right_det(m));
}

WeylOp d3_expand(const DNMatrix& a) {
  if (a.order() != 3) throw Error(Errc::InvalidArgument, "d3_expand needs N = 3");
  const Rat& a00 = a.at(0, 0);
  const Rat& a11 = a.at(1, 1);
  const Rat& a01 = a.at(0, 1);
  const Rat& a12 = a.at(1, 2);
  const Rat& a02 = a.at(0, 2);
  const Rat& a03 = a.at(0, 3);
  const RatPoly D = RatPoly::x();
  auto lin = [](long c, long s) { return RatPoly::linear(Rat(c), Rat(s)); };

  const RatPoly p1 = -(lin(1, 2) * ((a00 + a11) * D * D + (a00 + a11) * D + RatPoly(a00)));
  const Rat q2 = a11 * a11 + a00 * a00 + Rat(4) * a11 * a00 - a12 - Rat(2) * a01;
  const Rat q1 = Rat(8) * a11 * a00 - Rat(2) * a12 + Rat(2) * a00 * a00 - Rat(4) * a01 + Rat(2) * a11 * a11;
  const Rat q0 = Rat(6) * a11 * a00 + a00 * a00 - Rat(4) * a01;
  const RatPoly p2 = lin(1, 1) * RatPoly(std::vector<Rat>{q0, q1, q2});
  const Rat x3 = a00 * a00 * a11 + a11 * a11 * a00 - a12 * a00 + a02 - a11 * a01 - a01 * a00;
  const RatPoly p3 = -(lin(3, 2) * lin(2, 1) * lin(1, 1) * x3);
  const Rat x4 = -a00 * a00 * a12 + Rat(2) * a02 * a00 + a00 * a00 * a11 * a11 - a03 + a01 * a01 -
                 Rat(2) * a01 * a11 * a00;
  const RatPoly p4 = lin(3, 1) * lin(2, 1) * lin(1, 1) * x4;

  return WeylOp(WeylOp::Terms{{0, pow(D, 3)}, {1, p1}, {2, p2}, {3, p3}, {4, p4}});
}

WeylOp normalize_operator(const WeylOp& op) {
  if (op.is_zero()) return op;
  const long k0 = op.min_tdeg();
  const Rat lead = op.terms().begin()->second.leading();
  WeylOp::Terms out;
  for (const auto& [k, p] : op.terms()) out.emplace(k - k0, p * (Rat(1) / lead));
  return WeylOp(std::move(out));
}

WeylOp regularize_pipeline(const DNMatrix& a, PipelineTrace* trace) {
  if (a.order() != 3) throw Error(Errc::InvalidArgument, "regularize_pipeline needs N = 3");
  const unsigned n = a.order();
  std::vector<std::vector<WeylOp>> m(n + 1, std::vector<WeylOp>(n + 1));
  for (unsigned k = 0; k <= n; ++k) {
    for (unsigned l = 0; l <= n; ++l) {
      WeylOp entry;
      if (k == l + 1) {
        entry = WeylOp(Rat(1));
      } else if (k <= l) {
        entry = WeylOp::t(static_cast<long>(l - k + 1)) * a.at(k, l);
      }
      m[k][l] = (k == l ? WeylOp::D() : WeylOp()) - entry;
    }
  }
  const WeylOp det = right_det(m);

  // Left division by t in C[t, d].
  A1Op::Terms stripped_terms;
  const A1Op det_ddt = to_ddt(det);
  for (const auto& [ij, c] : det_ddt.terms()) {
    if (ij.first < 1)
      throw Error(Errc::NotLeftDivisibleByT, "term t^" + std::to_string(ij.first) + " d^" + std::to_string(ij.second));
    stripped_terms[{ij.first - 1, ij.second}] = c;
  }
  const A1Op stripped(std::move(stripped_terms));
  const A1Op transformed = fourier(stripped);

  // inv: t -> 1/t, D -> -D.
  WeylOp::Terms inv_terms;
  const WeylOp back = from_ddt(transformed);
  for (const auto& [k, p] : back.terms()) inv_terms.emplace(-k, p.scaled_arg(Rat(-1)));
  const WeylOp inverted(std::move(inv_terms));

  // t -> -t, D -> D.
  WeylOp::Terms shift_terms;
  for (const auto& [k, p] : inverted.terms()) shift_terms.emplace(k, (k % 2) ? -p : p);
  const WeylOp shifted(std::move(shift_terms));

  WeylOp result = shifted * WeylOp::t();
  if (trace) *trace = PipelineTrace{det, stripped, transformed, inverted, shifted, result};
  return result;
}

}  // namespace dnmod
