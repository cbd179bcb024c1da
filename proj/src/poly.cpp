#include "dnmod/poly.hpp"

#include "dnmod/error.hpp"

namespace dnmod {

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(const Rat& c) {
  if (!c.is_zero()) c_.push_back(c);
}

RatPoly RatPoly::x() { return RatPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

RatPoly RatPoly::linear(const Rat& a, const Rat& b) { return RatPoly(std::vector<Rat>{a, b}); }

RatPoly RatPoly::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::shifted(const Rat& a) const {
  // Horner in the ring: acc = acc * (x + a) + c_i.
  RatPoly acc;
  const RatPoly xa = linear(a);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * xa + RatPoly(*it);
  return acc;
}

RatPoly RatPoly::scaled_arg(const Rat& s) const {
  std::vector<Rat> v = c_;
  Rat f(1);
  for (auto& c : v) {
    c *= f;
    f *= s;
  }
  return RatPoly(std::move(v));
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return RatPoly(std::move(v));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  return *this * (Rat(1) / leading());
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rat& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  std::vector<Rat> r = a.c_;
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rat inv = Rat(1) / b.leading();
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rat f = r[k + db] * inv;
    q[k] = f;
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= f * b.c_[j];
  }
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

std::string RatPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rat& c = c_[k];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rat mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    if (k == 0) {
      out += mag.str();
      continue;
    }
    if (mag != Rat(1)) out += mag.str() + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

RatPoly pow(const RatPoly& p, unsigned e) {
  RatPoly acc(Rat(1));
  for (unsigned i = 0; i < e; ++i) acc = acc * p;
  return acc;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    auto r = RatPoly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<std::pair<unsigned, RatPoly>> squarefree_decomposition(const RatPoly& p) {
  std::vector<std::pair<unsigned, RatPoly>> out;
  if (p.degree() <= 0) return out;
  const RatPoly f = p.monic();
  const RatPoly fp = f.derivative();
  RatPoly a = gcd(f, fp);
  RatPoly b = RatPoly::divmod(f, a).first;
  RatPoly c = RatPoly::divmod(fp, a).first;
  RatPoly d = c - b.derivative();
  for (unsigned m = 1; b.degree() > 0; ++m) {
    RatPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(m, g);
    b = RatPoly::divmod(b, g).first;
    c = RatPoly::divmod(d, g).first;
    d = c - b.derivative();
  }
  return out;
}

}  // namespace dnmod
