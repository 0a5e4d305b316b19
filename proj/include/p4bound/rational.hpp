#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace p4bound {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class so the rest of the
/// library never sees gmpxx expression templates.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T value) : value_(static_cast<long>(value)) {  // NOLINT(google-explicit-constructor)
    static_assert(sizeof(T) <= sizeof(long), "integer wider than long");
  }

  /// Throws std::domain_error when den == 0.
  Rational(std::int64_t num, std::int64_t den);

  explicit Rational(const mpq_class& value);

  /// Parses "p/q" or "p" (optional leading '-'); result is canonicalized.
  /// Throws std::invalid_argument on malformed text or zero denominator.
  static Rational parse(std::string_view text);

  [[nodiscard]] const mpq_class& raw() const noexcept { return value_; }

  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }

  [[nodiscard]] bool is_integer() const noexcept;
  [[nodiscard]] int sign() const noexcept { return sgn(value_); }

  /// Floor / ceiling as exact integers. Throw std::overflow_error if the
  /// result does not fit in 64 bits.
  [[nodiscard]] std::int64_t floor() const;
  [[nodiscard]] std::int64_t ceil() const;

  /// Integer value; throws std::domain_error when not an integer.
  [[nodiscard]] std::int64_t to_int64() const;

  /// Lossless rendering: "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string to_string() const;
  /// Always "p/q", even for integers ("7/1"). Used by serializers.
  [[nodiscard]] std::string to_fraction_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x);

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace p4bound
