#include "dnmod/rat.hpp"

#include <cctype>

#include "dnmod/error.hpp"

namespace dnmod {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotPrime: return "NotPrime";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DivisionByHigherValuation: return "DivisionByHigherValuation";
    case Errc::CompositionNeedsPositiveValuation: return "CompositionNeedsPositiveValuation";
    case Errc::NotReversible: return "NotReversible";
    case Errc::RootNeedsUnitConstantTerm: return "RootNeedsUnitConstantTerm";
    case Errc::NotLeftDivisibleByD: return "NotLeftDivisibleByD";
    case Errc::NotLeftDivisibleByT: return "NotLeftDivisibleByT";
    case Errc::AsymmetricMatrix: return "AsymmetricMatrix";
    case Errc::UnsupportedPair: return "UnsupportedPair";
    case Errc::UnsupportedLevel: return "UnsupportedLevel";
    case Errc::NoD3Annihilator: return "NoD3Annihilator";
    case Errc::UnderdeterminedFit: return "UnderdeterminedFit";
    case Errc::NotD3Shaped: return "NotD3Shaped";
    case Errc::BadPrime: return "BadPrime";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rat::Rat(long num, long den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::parse(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto to_int = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Int(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) throw Error(Errc::ParseError, "bad rational '" + std::string(text) + "'");
    return Rat(to_int(text));
  }
  const auto n = text.substr(0, slash);
  const auto d = text.substr(slash + 1);
  if (!is_int(n) || !is_int(d) || d.front() == '-' || d.front() == '+')
    throw Error(Errc::ParseError, "bad rational '" + std::string(text) + "'");
  return Rat(to_int(n), to_int(d));
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat pow(const Rat& base, long exponent) {
  if (exponent < 0) return pow(Rat(1) / base, -exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rat(n, d);
}

}  // namespace dnmod
