#pragma once

#include "p4bound/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace p4bound {

/// Univariate polynomial in d with rational coefficients. coefficient(i)
/// multiplies d^i. Trailing zero coefficients are stripped, so the zero
/// polynomial has no coefficients and degree -1.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> coefficients);
  RatPolynomial(std::initializer_list<Rational> coefficients);

  static RatPolynomial constant(const Rational& c);
  /// The indeterminate d itself.
  static RatPolynomial identity();

  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] Rational coefficient(int power) const;
  [[nodiscard]] const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  [[nodiscard]] Rational leading_coefficient() const;

  /// Horner evaluation.
  [[nodiscard]] Rational operator()(const Rational& x) const;

  /// p(q(d)).
  [[nodiscard]] RatPolynomial compose(const RatPolynomial& inner) const;

  /// Human-readable form, highest power first, e.g. "1/8 d^3 - 275/32 d^2 + 7/2 d - 195".
  [[nodiscard]] std::string to_string() const;

  RatPolynomial& operator+=(const RatPolynomial& rhs);
  RatPolynomial& operator-=(const RatPolynomial& rhs);
  RatPolynomial& operator*=(const RatPolynomial& rhs);

  friend RatPolynomial operator+(RatPolynomial a, const RatPolynomial& b) { return a += b; }
  friend RatPolynomial operator-(RatPolynomial a, const RatPolynomial& b) { return a -= b; }
  friend RatPolynomial operator*(RatPolynomial a, const RatPolynomial& b) { return a *= b; }
  friend RatPolynomial operator*(const Rational& c, const RatPolynomial& p);
  friend RatPolynomial operator-(const RatPolynomial& p);

  friend bool operator==(const RatPolynomial&, const RatPolynomial&) = default;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

Rational poly_eval(const RatPolynomial& p, const Rational& x);

}  // namespace p4bound
