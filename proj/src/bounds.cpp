#include "p4bound/bounds.hpp"

#include "p4bound/binomial.hpp"

#include <stdexcept>
#include <string>

namespace p4bound {

SurfaceClass::SurfaceClass(std::int64_t degree, int min_hypersurface_degree)
    : d(degree), s(min_hypersurface_degree), r(0), in_gp_range(false) {
  if (d < 1 || s < 1) {
    throw std::invalid_argument("surface class needs d >= 1 and s >= 1 (got d=" + std::to_string(d) +
                                ", s=" + std::to_string(s) + ")");
  }
  r = d % s;
  const std::int64_t sm1 = s - 1;
  in_gp_range = d > sm1 * sm1 + 1;
}

std::string_view to_string(SeriesMode mode) {
  return mode == SeriesMode::integer ? "integer" : "rational-limit";
}

SeriesMode parse_series_mode(std::string_view text) {
  if (text == "rational-limit") return SeriesMode::rational_limit;
  if (text == "integer") return SeriesMode::integer;
  throw std::invalid_argument("unknown series mode '" + std::string(text) + "'");
}

SporadicProfile::SporadicProfile(std::int64_t d, std::map<std::int64_t, std::int64_t> alpha) : d_(d) {
  for (const auto& [t, count] : alpha) add(t, count);
}

void SporadicProfile::add(std::int64_t t, std::int64_t count) {
  if (count < 0) throw std::invalid_argument("negative sporadic-zero count");
  if (t < 0 || t > d_ - 2) {
    throw std::invalid_argument("sporadic zero in degree " + std::to_string(t) + " outside 0.." +
                                std::to_string(d_ - 2));
  }
  if (count == 0) return;
  alpha_[t] += count;
}

std::int64_t SporadicProfile::count_at(std::int64_t t) const {
  const auto it = alpha_.find(t);
  return it == alpha_.end() ? 0 : it->second;
}

std::int64_t SporadicProfile::total_count() const {
  std::int64_t n = 0;
  for (const auto& [t, count] : alpha_) n += count;
  return n;
}

Rational SporadicProfile::total_weight() const {
  Rational w(0);
  for (const auto& [t, count] : alpha_) w += Rational(count) * Rational(12 * t - 22);
  return w;
}

std::optional<std::int64_t> SporadicProfile::max_degree() const {
  if (alpha_.empty()) return std::nullopt;
  return alpha_.rbegin()->first;
}

Rational gp_bound_G(const SurfaceClass& sc) {
  const Rational d(sc.d), s(sc.s), r(sc.r);
  return d * d / (Rational(2) * s) + (s - Rational(4)) * d / Rational(2) + Rational(1) -
         r * (s - r) * (s - Rational(1)) / (Rational(2) * s);
}

Rational chi_lower_closed(const SurfaceClass& sc) {
  if (sc.s < 2) throw std::domain_error("chi_lower_closed needs s >= 2");
  const Rational d(sc.d), s(sc.s);
  return s * binom_poly3(d / s + Rational(sc.s - 3, 2)) + Rational(1) - Rational(binom_int(sc.s - 1, 4));
}

Rational gamma_ep(const SurfaceClass& sc) {
  const Rational sm1(sc.s - 1);
  return Rational(sc.d) * sm1 * sm1 / Rational(2 * sc.s);
}

Rational gamma_dp(const SurfaceClass& sc, bool sharpened) {
  const Rational d(sc.d), s(sc.s);
  Rational value = d * d / (Rational(2) * s) + (s - Rational(4)) * d / Rational(2) + Rational(1) -
                   (d * d - Rational(5) * d + Rational(10)) / Rational(10);
  if (sharpened) {
    const Rational r(sc.r);
    value -= r * (s - r) * (s - Rational(1)) / (Rational(2) * s);
  }
  return value;
}

GammaCaps gamma_cap(const SurfaceClass& sc, bool sharpened) {
  GammaCaps caps{gamma_ep(sc), gamma_dp(sc, sharpened), Rational(0)};
  caps.combined = min(caps.ep, caps.dp);
  return caps;
}

Rational sporadic_chain_start(const SurfaceClass& sc) {
  return Rational(sc.d, sc.s) + Rational(sc.s - 1);
}

ChainEndpoints chain_endpoints(const SurfaceClass& sc, const Rational& gamma, SeriesMode mode) {
  const Rational d(sc.d), s(sc.s);
  const Rational lower = sporadic_chain_start(sc);
  ChainEndpoints e{lower, min(d - Rational(2), lower + gamma - Rational(1)),
                   gamma - d + Rational(2) * d / s + Rational(2) * s - Rational(2)};
  if (mode == SeriesMode::integer) {
    e.lower = Rational(e.lower.ceil());
    e.first_upper = Rational(e.first_upper.floor());
    e.second_upper = Rational(e.second_upper.floor());
  }
  return e;
}

Rational sporadic_weight_cap(const SurfaceClass& sc, const Rational& gamma, SeriesMode mode) {
  if (gamma.sign() < 0) throw std::domain_error("sporadic_weight_cap: negative gamma " + gamma.to_string());
  const ChainEndpoints e = chain_endpoints(sc, gamma, mode);
  return weight_series(e.lower, e.first_upper) + weight_series(e.lower, e.second_upper);
}

}  // namespace p4bound
