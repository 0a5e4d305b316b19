#include "p4bound/binomial.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace p4bound {

std::int64_t binom_int(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) {
    throw std::domain_error("binom_int: negative argument (" + std::to_string(n) + ", " + std::to_string(k) + ")");
  }
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  // C(n, i) * (n - i) is divisible by (i + 1) at every step.
  __int128 acc = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    acc = acc * (n - i) / (i + 1);
    if (acc > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("binom_int overflow");
  }
  return static_cast<std::int64_t>(acc);
}

Rational binom_poly2(const Rational& x) { return x * (x - Rational(1)) / Rational(2); }

Rational binom_poly3(const Rational& x) { return x * (x - Rational(1)) * (x - Rational(2)) / Rational(6); }

RatPolynomial binom_poly2(const RatPolynomial& x) {
  return Rational(1, 2) * x * (x - RatPolynomial::constant(1));
}

RatPolynomial binom_poly3(const RatPolynomial& x) {
  return Rational(1, 6) * x * (x - RatPolynomial::constant(1)) * (x - RatPolynomial::constant(2));
}

std::int64_t weight_series(std::int64_t a, std::int64_t b) {
  if (b < a) return 0;
  return (b - a + 1) * (6 * (a + b) - 22);
}

Rational weight_series(const Rational& a, const Rational& b) {
  if (b < a) return Rational(0);
  return (b - a + Rational(1)) * (Rational(6) * (a + b) - Rational(22));
}

RatPolynomial weight_series(const RatPolynomial& a, const RatPolynomial& b) {
  const auto one = RatPolynomial::constant(1);
  return (b - a + one) * (Rational(6) * (a + b) - RatPolynomial::constant(22));
}

}  // namespace p4bound
