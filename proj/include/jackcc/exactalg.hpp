#pragma once

// Exact coefficient rings: GMP rationals, Laurent polynomials in alpha and
// bivariate polynomials in (alpha, X). Nothing in the engine uses floating
// point.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jackcc {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when a proved identity fails to hold on computed data. Always
/// indicates an arithmetic or implementation bug, never bad user input.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on junk or a
/// zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

bool is_integer(const Rational& q);

/// Laurent polynomial in alpha with rational coefficients.
///
/// Stored as a lowest exponent plus a dense coefficient run. The run never
/// starts or ends with a zero, and the zero polynomial has an empty run with
/// min_degree() == 0, so structural equality is mathematical equality.
class LaurentAlpha {
 public:
  LaurentAlpha() = default;
  LaurentAlpha(int min_degree, std::vector<Rational> coeffs);
  LaurentAlpha(const Rational& constant);  // NOLINT(google-explicit-constructor)
  LaurentAlpha(long constant) : LaurentAlpha(Rational(constant)) {}  // NOLINT
  LaurentAlpha(int constant) : LaurentAlpha(Rational(constant)) {}   // NOLINT

  static LaurentAlpha monomial(const Rational& c, int degree);
  /// The indeterminate itself.
  static LaurentAlpha alpha() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
  int min_degree() const { return min_degree_; }
  /// Highest exponent with a nonzero coefficient; requires !is_zero().
  int max_degree() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int degree) const;

  /// True for zero or when no negative powers are present.
  bool is_polynomial() const { return is_zero() || min_degree_ >= 0; }
  bool has_integer_coeffs() const;

  /// Multiplication by alpha^k.
  LaurentAlpha shifted(int k) const;
  /// Substitution alpha -> 1/alpha.
  LaurentAlpha inverted() const;

  LaurentAlpha& operator+=(const LaurentAlpha& o);
  LaurentAlpha& operator-=(const LaurentAlpha& o);
  LaurentAlpha& operator*=(const LaurentAlpha& o);
  /// In-place multiplication by a rational constant.
  LaurentAlpha& scale(const Rational& c);

  friend LaurentAlpha operator+(LaurentAlpha a, const LaurentAlpha& b) { return a += b; }
  friend LaurentAlpha operator-(LaurentAlpha a, const LaurentAlpha& b) { return a -= b; }
  friend LaurentAlpha operator*(const LaurentAlpha& a, const LaurentAlpha& b);
  friend LaurentAlpha operator-(const LaurentAlpha& a);
  friend bool operator==(const LaurentAlpha& a, const LaurentAlpha& b) {
    return a.min_degree_ == b.min_degree_ && a.coeffs_ == b.coeffs_;
  }

  /// Human readable form, e.g. "alpha^2 - 1" or "1/3*alpha^-1".
  std::string to_string() const;

 private:
  void canonicalize();

  int min_degree_ = 0;
  std::vector<Rational> coeffs_;
};

LaurentAlpha laurent_add(const LaurentAlpha& a, const LaurentAlpha& b);
LaurentAlpha laurent_mul(const LaurentAlpha& a, const LaurentAlpha& b);
LaurentAlpha laurent_neg(const LaurentAlpha& a);
LaurentAlpha pow(const LaurentAlpha& a, unsigned e);

/// a / (c * alpha^k). Throws std::domain_error when c == 0.
LaurentAlpha laurent_div_monomial(const LaurentAlpha& a, const Rational& c, int k);

/// Exact evaluation at alpha = v. Throws std::domain_error for v == 0 when
/// negative powers are present.
Rational substitute_alpha(const LaurentAlpha& a, const Rational& v);

/// Rewrites a polynomial in alpha in powers of b = alpha - 1. Entry i is the
/// coefficient of b^i. Throws std::domain_error if negative powers are present.
std::vector<Rational> to_b_variable(const LaurentAlpha& a);

/// Inverse of to_b_variable: substitutes b = alpha - 1.
LaurentAlpha from_b_variable(std::span<const Rational> b_coeffs);

/// Polynomial long division over Q. Both operands must be polynomials and the
/// divisor nonzero. Returns (quotient, remainder).
std::pair<LaurentAlpha, LaurentAlpha> poly_divmod(const LaurentAlpha& num, const LaurentAlpha& den);

/// Division that must be exact; throws TheoremViolation with `context` when a
/// remainder is left over.
LaurentAlpha exact_divide(const LaurentAlpha& num, const LaurentAlpha& den, std::string_view context);

/// Unique polynomial of degree <= degree_bound through the first
/// degree_bound + 1 points; every further point must lie on it.
/// Throws std::invalid_argument on too few points or a repeated abscissa and
/// std::domain_error on an inconsistent overdetermined system.
LaurentAlpha interpolate(std::span<const std::pair<Rational, Rational>> points, int degree_bound);

/// Polynomial in (alpha, X), keyed by (deg_alpha, deg_X). No zero entries.
class BivarAlphaX {
 public:
  using Key = std::pair<int, int>;

  BivarAlphaX() = default;
  /// coeff(alpha) * X^x_degree; coeff must be a polynomial in alpha.
  static BivarAlphaX from_alpha(const LaurentAlpha& coeff, int x_degree = 0);
  /// X + c(alpha).
  static BivarAlphaX x_plus(const LaurentAlpha& c);

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int alpha_degree, int x_degree) const;
  /// Coefficient of X^x_degree as a polynomial in alpha.
  LaurentAlpha x_coeff(int x_degree) const;
  /// Substitutes X = x, leaving a polynomial in alpha.
  LaurentAlpha at_x(const Rational& x) const;

  BivarAlphaX& operator+=(const BivarAlphaX& o);
  friend BivarAlphaX operator+(BivarAlphaX a, const BivarAlphaX& b) { return a += b; }
  friend BivarAlphaX operator*(const BivarAlphaX& a, const BivarAlphaX& b);
  friend bool operator==(const BivarAlphaX&, const BivarAlphaX&) = default;

  std::string to_string() const;

 private:
  void add_term(Key key, const Rational& c);
  std::map<Key, Rational> terms_;
};

}  // namespace jackcc
