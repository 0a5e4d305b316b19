#pragma once

#include "p4bound/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace p4bound {

/// Strictly decreasing positive sequence lambda_0 > ... > lambda_{s-1} > 0
/// of a generic plane section's generic initial ideal. d = sum of the parts.
class ConnectedInvariants {
 public:
  /// Throws std::invalid_argument unless the sequence is non-empty,
  /// positive and strictly decreasing.
  explicit ConnectedInvariants(std::vector<std::int64_t> lambda);

  [[nodiscard]] std::span<const std::int64_t> lambda() const noexcept { return lambda_; }
  [[nodiscard]] std::int64_t operator[](std::size_t i) const { return lambda_.at(i); }
  [[nodiscard]] int s() const noexcept { return static_cast<int>(lambda_.size()); }
  [[nodiscard]] std::int64_t d() const noexcept { return d_; }

  /// lambda_0 <= d/s + s - 1 and (for s >= 2) lambda_1 <= d/s + s - 2.
  [[nodiscard]] bool satisfies_caps() const noexcept;
  /// Consecutive parts differ by at most 2, i.e. the numerical character
  /// n_i = lambda_i + i has no gaps. Implies satisfies_caps().
  [[nodiscard]] bool is_gap_free() const noexcept;

  /// "(5,4,1)"
  [[nodiscard]] std::string to_string() const;
  /// Accepts "5,4,1" or "(5,4,1)".
  static ConnectedInvariants parse(std::string_view text);

  friend bool operator==(const ConnectedInvariants&, const ConnectedInvariants&) = default;
  friend auto operator<=>(const ConnectedInvariants& a, const ConnectedInvariants& b) {
    return a.lambda_ <=> b.lambda_;
  }

 private:
  std::vector<std::int64_t> lambda_;
  std::int64_t d_ = 0;
};

/// Which admissibility rule the enumeration applies on top of
/// "strictly decreasing, positive, sums to d".
enum class Connectivity {
  unrestricted,  ///< every partition of d into s distinct parts
  lambda_caps,   ///< only the caps on lambda_0 and lambda_1
  gap_free,      ///< lambda_i - lambda_{i+1} <= 2 for all i
};

std::string_view to_string(Connectivity c);
/// "none" | "caps" | "gap-free"; throws std::invalid_argument otherwise.
Connectivity parse_connectivity(std::string_view text);

struct EnumerationConstraints {
  std::int64_t d = 0;
  int s = 0;
  Connectivity connectivity = Connectivity::gap_free;
};

/// Visits every admissible sequence in lexicographically decreasing order.
void for_each_invariant(const EnumerationConstraints& c,
                        const std::function<void(const ConnectedInvariants&)>& visit);

/// Materialized form of for_each_invariant. Empty when (d, s) is infeasible.
std::vector<ConnectedInvariants> enumerate_invariants(const EnumerationConstraints& c);

std::int64_t count_invariants(const EnumerationConstraints& c);

/// 1 + sum_i (binom(lambda_i, 2) + (i - 1) lambda_i): the genus of a curve
/// with these invariants and no sporadic zeros.
std::int64_t genus_functional(const ConnectedInvariants& inv);

/// sum_i (binom(lambda_i, 2) + i lambda_i) == genus_functional - 1 + d.
std::int64_t genus_functional_alt(const ConnectedInvariants& inv);

/// sum_t (binom3(lambda_t + t - 1) - binom3(t - 1)) with the polynomial
/// extension of binom3, so the t = 0 term contributes +1.
Rational chi_functional(const ConnectedInvariants& inv);

}  // namespace p4bound
