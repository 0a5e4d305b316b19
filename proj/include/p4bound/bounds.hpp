#pragma once

#include "p4bound/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

namespace p4bound {

/// A degree-d surface whose smallest containing hypersurface has degree s.
struct SurfaceClass {
  /// Throws std::invalid_argument unless d >= 1 and s >= 1.
  SurfaceClass(std::int64_t degree, int min_hypersurface_degree);

  std::int64_t d;
  int s;
  std::int64_t r;    ///< d mod s
  bool in_gp_range;  ///< d > (s-1)^2 + 1, where the genus bound G(d,s) holds
};

/// How the arithmetic series over sporadic-zero degrees treats endpoints
/// that are not integers (d not divisible by s, fractional gamma).
enum class SeriesMode {
  rational_limit,  ///< endpoints enter the closed form as exact rationals
  integer,         ///< lower endpoint rounded up, upper endpoints rounded down
};

std::string_view to_string(SeriesMode mode);
/// "rational-limit" | "integer"; throws std::invalid_argument otherwise.
SeriesMode parse_series_mode(std::string_view text);

struct GammaCaps {
  Rational ep;        ///< d (s-1)^2 / (2s)
  Rational dp;        ///< from pi >= (d^2 - 5d + 10)/10
  Rational combined;  ///< min(ep, dp); negative means no such surface
};

/// Sporadic-zero counts alpha_t by degree t, all with t <= d - 2.
class SporadicProfile {
 public:
  explicit SporadicProfile(std::int64_t d) : d_(d) {}
  /// Throws std::invalid_argument on t > d - 2, t < 0 or count < 0.
  SporadicProfile(std::int64_t d, std::map<std::int64_t, std::int64_t> alpha);

  void add(std::int64_t t, std::int64_t count);

  [[nodiscard]] const std::map<std::int64_t, std::int64_t>& alpha() const noexcept { return alpha_; }
  [[nodiscard]] std::int64_t count_at(std::int64_t t) const;
  [[nodiscard]] std::int64_t total_count() const;
  /// sum_t alpha_t (12t - 22)
  [[nodiscard]] Rational total_weight() const;
  /// Largest t with alpha_t > 0.
  [[nodiscard]] std::optional<std::int64_t> max_degree() const;

 private:
  std::int64_t d_;
  std::map<std::int64_t, std::int64_t> alpha_;
};

/// Gruson-Peskine genus bound d^2/(2s) + (s-4)d/2 + 1 - r(s-r)(s-1)/(2s).
/// Computed for every (d, s); only certifying when sc.in_gp_range.
Rational gp_bound_G(const SurfaceClass& sc);

/// s * binom3(d/s + (s-3)/2) + 1 - binom(s-1, 4). Throws std::domain_error
/// when s < 2.
Rational chi_lower_closed(const SurfaceClass& sc);

Rational gamma_ep(const SurfaceClass& sc);
/// d^2/(2s) + (s-4)d/2 + 1 - (d^2 - 5d + 10)/10. With `sharpened` the
/// r(s-r)(s-1)/(2s) term of G is subtracted as well.
Rational gamma_dp(const SurfaceClass& sc, bool sharpened = false);
GammaCaps gamma_cap(const SurfaceClass& sc, bool sharpened = false);

/// d/s + s - 1: lowest degree the lambda caps allow a sporadic zero in.
Rational sporadic_chain_start(const SurfaceClass& sc);

/// Endpoints of the two chains in the weight cap. Both chains start at
/// `lower`; the first runs to `first_upper` = min(d - 2, lower + gamma - 1),
/// the second to `second_upper` = gamma - d + 2d/s + 2s - 2.
struct ChainEndpoints {
  Rational lower;
  Rational first_upper;
  Rational second_upper;
};

ChainEndpoints chain_endpoints(const SurfaceClass& sc, const Rational& gamma, SeriesMode mode);

/// Upper bound on A = sum alpha_t (12t - 22) for at most gamma sporadic
/// zeros laid out from the chain start upward, one per degree up to d - 2,
/// then a second layer. Throws std::domain_error when gamma < 0.
Rational sporadic_weight_cap(const SurfaceClass& sc, const Rational& gamma,
                             SeriesMode mode = SeriesMode::rational_limit);

}  // namespace p4bound
