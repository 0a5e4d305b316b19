#include "p4bound/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace p4bound {

RatPolynomial::RatPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

RatPolynomial::RatPolynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  normalize();
}

RatPolynomial RatPolynomial::constant(const Rational& c) { return RatPolynomial({c}); }

RatPolynomial RatPolynomial::identity() { return RatPolynomial({Rational(0), Rational(1)}); }

Rational RatPolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational RatPolynomial::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational RatPolynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

RatPolynomial RatPolynomial::compose(const RatPolynomial& inner) const {
  RatPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

std::string RatPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int power = degree(); power >= 0; --power) {
    const Rational& c = coeffs_[static_cast<std::size_t>(power)];
    if (c.sign() == 0) continue;
    const Rational magnitude = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = magnitude == Rational(1);
    if (power == 0 || !unit) os << magnitude;
    if (power > 0) {
      if (!unit) os << " ";
      os << "d";
      if (power > 1) os << "^" << power;
    }
  }
  return os.str();
}

RatPolynomial& RatPolynomial::operator+=(const RatPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

RatPolynomial& RatPolynomial::operator-=(const RatPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

RatPolynomial& RatPolynomial::operator*=(const RatPolynomial& rhs) {
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> product(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) product[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(product);
  normalize();
  return *this;
}

RatPolynomial operator*(const Rational& c, const RatPolynomial& p) { return RatPolynomial::constant(c) * p; }

RatPolynomial operator-(const RatPolynomial& p) { return Rational(-1) * p; }

void RatPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().sign() == 0) coeffs_.pop_back();
}

Rational poly_eval(const RatPolynomial& p, const Rational& x) { return p(x); }

}  // namespace p4bound
