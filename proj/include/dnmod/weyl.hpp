#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dnmod/poly.hpp"
#include "dnmod/series.hpp"

namespace dnmod {

/// Polynomial in D = t d/dt.
using DPoly = RatPoly;

/// Operator sum_k t^k p_k(D) in normal form (t-powers on the left), reduced
/// with D t = t (D + 1). Keys may be negative for Laurent operators on the
/// torus; zero DPolys are never stored.
class WeylOp {
 public:
  using Terms = std::map<long, DPoly>;

  WeylOp() = default;
  explicit WeylOp(Terms terms);
  WeylOp(const Rat& c);  // NOLINT(google-explicit-constructor)
  WeylOp(long c) : WeylOp(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  WeylOp(int c) : WeylOp(Rat(c)) {}   // NOLINT(google-explicit-constructor)

  static WeylOp D();
  static WeylOp t(long power = 1);
  /// t^k p(D).
  static WeylOp term(long k, DPoly p);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// p_k, zero if absent.
  DPoly coeff(long k) const;
  long min_tdeg() const;
  long max_tdeg() const;
  /// Maximum degree in D over all terms (order of the operator).
  long order() const;

  WeylOp& operator+=(const WeylOp& o);
  WeylOp& operator-=(const WeylOp& o);
  WeylOp& operator*=(const Rat& s);

  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  friend WeylOp operator-(WeylOp a) { return a *= Rat(-1); }
  friend WeylOp operator*(WeylOp a, const Rat& s) { return a *= s; }
  friend WeylOp operator*(const Rat& s, WeylOp a) { return a *= s; }
  friend WeylOp operator*(const WeylOp& a, const WeylOp& b);
  friend bool operator==(const WeylOp& a, const WeylOp& b) = default;

  /// e.g. "D^3-t*(256*D^3+384*D^2+176*D+24)"; parse_operator reads it back.
  std::string str() const;

 private:
  void drop_zeros();
  Terms terms_;
};

WeylOp weyl_mul(const WeylOp& a, const WeylOp& b);

/// Parses an operator written in t and D with +, -, *, ^, parentheses and
/// rational literals, e.g. "D^3-8*t*(1+2*D)*(4*D+3)*(4*D+1)". Products are
/// evaluated in written order in the noncommutative algebra. Juxtaposition
/// is not accepted; use '*'.
WeylOp parse_operator(std::string_view text);

/// Operator sum c_{ij} t^i d^j on the affine line, normal form with all t's
/// left of all derivations, reduced with d t = t d + 1.
class A1Op {
 public:
  using Terms = std::map<std::pair<long, long>, Rat>;

  A1Op() = default;
  explicit A1Op(Terms terms);

  static A1Op t(long power = 1);
  static A1Op d(long power = 1);
  static A1Op constant(const Rat& c);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  A1Op& operator+=(const A1Op& o);
  A1Op& operator*=(const Rat& s);
  friend A1Op operator+(A1Op a, const A1Op& b) { return a += b; }
  friend A1Op operator*(A1Op a, const Rat& s) { return a *= s; }
  friend A1Op operator*(const A1Op& a, const A1Op& b);
  friend bool operator==(const A1Op& a, const A1Op& b) = default;

 private:
  void drop_zeros();
  Terms terms_;
};

/// t^k D^n = sum_j S(n, j) t^{k+j} d^j. Requires nonnegative t-degrees.
A1Op to_ddt(const WeylOp& op);
/// t^i d^j = t^{i-j} D (D-1) ... (D-j+1); may produce negative t-degrees.
WeylOp from_ddt(const A1Op& op);

/// FT(sum f_i(t) d^i) = sum f_i(d) (-t)^i.
A1Op fourier(const A1Op& op);

/// L' with D L' = L; throws NotLeftDivisibleByD.
WeylOp strip_left_D(const WeylOp& op);
/// L' with t L' = L in the torus algebra; throws NotLeftDivisibleByT.
WeylOp strip_left_t(const WeylOp& op);

/// Applies the operator to x^offset * body, with D acting as x d/dx.
FracSeries weyl_apply(const WeylOp& op, const FracSeries& s);
RatSeries weyl_apply(const WeylOp& op, const RatSeries& s);

/// Anti-automorphism fixing t with D -> -D: (t^k p(D))* = p(-D) t^k.
WeylOp formal_adjoint(const WeylOp& op);

/// The t-degree-0 part p_0(D).
DPoly indicial_at_zero(const WeylOp& op);

/// Leading coefficient c_n(t) of the operator rewritten as sum c_j(t) (d/dt)^j,
/// with the common power of t removed. Coefficient vector indexed by t-degree.
RatPoly symbol_polynomial(const WeylOp& op);

/// Multiplicity data of the nonzero roots of a symbol polynomial.
struct SymbolRoots {
  RatPoly symbol;
  /// (multiplicity, monic squarefree factor) pairs.
  std::vector<std::pair<unsigned, RatPoly>> factors;
  /// Number of distinct nonzero roots counted with/without multiplicity.
  long distinct_roots = 0;
  long roots_with_multiplicity = 0;
};
SymbolRoots symbol_roots(const WeylOp& op);

/// Right determinant: Laplace expansion over the rightmost column with
/// each element multiplied on the right by its signed complement, the
/// complements themselves being right determinants.
WeylOp right_det(const std::vector<std::vector<WeylOp>>& m);

/// Symmetric parameter matrix {a_ij}, 0 <= i <= j <= N, with
/// a_ij = a_{N-j,N-i}. Only the upper triangle is stored.
class DNMatrix {
 public:
  DNMatrix() = default;
  /// Zero matrix of order N.
  explicit DNMatrix(unsigned order);
  /// Entries keyed by (i, j), i <= j. Missing entries are filled from their
  /// SW-NE mirror; a missing pair defaults to zero. Throws AsymmetricMatrix
  /// when a pair disagrees.
  DNMatrix(unsigned order, const std::map<std::pair<unsigned, unsigned>, Rat>& entries);
  /// N = 3 from the six independent entries.
  static DNMatrix d3(const Rat& a00, const Rat& a01, const Rat& a02, const Rat& a03, const Rat& a11,
                     const Rat& a12);

  unsigned order() const noexcept { return n_; }
  /// a_ij for i <= j (for i > j the entry of the operator matrix is not an a).
  const Rat& at(unsigned i, unsigned j) const;
  const std::map<std::pair<unsigned, unsigned>, Rat>& entries() const noexcept { return a_; }

  friend bool operator==(const DNMatrix& a, const DNMatrix& b) = default;

 private:
  unsigned n_ = 0;
  std::map<std::pair<unsigned, unsigned>, Rat> a_;
};

/// Adds `shift` to every diagonal entry (same class).
DNMatrix class_shift(const DNMatrix& a, const Rat& shift);
/// Shifts the class representative so that a_00 = 0.
DNMatrix normalize_class(const DNMatrix& a);
/// True when the matrices differ by a scalar matrix.
bool same_class(const DNMatrix& a, const DNMatrix& b);

/// Builds L with D L = det_right(D - M), M_kl = a_kl (D t)^{l-k+1} for k <= l
/// and M_{l+1,l} = 1.
WeylOp dn_build(const DNMatrix& a);

/// Closed-form expansion of a D3 operator in the six independent entries.
WeylOp d3_expand(const DNMatrix& a);

/// Intermediate stages of the regularization chain, kept for inspection.
struct PipelineTrace {
  WeylOp connection_det;   // det_right(D - M(t)) in the torus algebra
  A1Op stripped;           // t^{-1} times that, on the affine line
  A1Op transformed;        // after the Fourier transform
  WeylOp inverted;         // after t -> 1/t
  WeylOp shifted;          // after t -> -t
  WeylOp result;           // multiplied by t on the right
};

/// Runs the chain connection matrix -> right determinant -> strip t ->
/// Fourier transform -> inversion -> sign shift -> right multiplication by t.
WeylOp regularize_pipeline(const DNMatrix& a, PipelineTrace* trace = nullptr);

/// Rescales a Laurent operator so its lowest t-degree is 0 and p_0 is monic.
WeylOp normalize_operator(const WeylOp& op);

}  // namespace dnmod
