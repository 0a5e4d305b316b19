#pragma once

#include "p4bound/polynomial.hpp"
#include "p4bound/rational.hpp"

#include <cstdint>

namespace p4bound {

/// Combinatorial binomial coefficient; 0 when k > n.
/// Throws std::domain_error for negative arguments: the polynomial
/// extension has to be asked for explicitly through binom_poly2/binom_poly3.
std::int64_t binom_int(std::int64_t n, std::int64_t k);

/// x(x-1)/2, defined for every rational x.
Rational binom_poly2(const Rational& x);

/// x(x-1)(x-2)/6, defined for every rational x. binom_poly3(-1) == -1.
Rational binom_poly3(const Rational& x);

/// Same polynomials applied to a polynomial argument (used to build the
/// deficit cubics symbolically).
RatPolynomial binom_poly2(const RatPolynomial& x);
RatPolynomial binom_poly3(const RatPolynomial& x);

/// Sum over t = a..b of (12t - 22), via (b-a+1)(6(a+b)-22). Empty range gives 0.
std::int64_t weight_series(std::int64_t a, std::int64_t b);

/// The same closed form with rational endpoints, as the limit-form bounds
/// use them (e.g. a = 5d/8 + 6 for non-divisible d). Returns 0 when b < a.
Rational weight_series(const Rational& a, const Rational& b);

/// Closed form with polynomial endpoints, no emptiness test; the caller is
/// responsible for knowing b >= a on the range of interest.
RatPolynomial weight_series(const RatPolynomial& a, const RatPolynomial& b);

}  // namespace p4bound
