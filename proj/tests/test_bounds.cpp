#include <doctest.h>

#include "oracle.hpp"
#include "p4bound/bounds.hpp"

using p4bound::Rational;
using p4bound::SeriesMode;
using p4bound::SurfaceClass;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

SurfaceClass sc(std::int64_t d, int s) { return SurfaceClass(d, s); }

// Sum of 12t - 22 over a chain whose endpoints are integers.
std::int64_t chain(const Rational& lo, const Rational& hi) { return oracle::weight_loop(lo.to_int64(), hi.to_int64()); }

}  // namespace

TEST_CASE("surface class") {
  CHECK(sc(21, 4).r == 1);
  CHECK(sc(11, 4).in_gp_range);
  CHECK_FALSE(sc(10, 4).in_gp_range);
  CHECK_THROWS_AS(sc(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(sc(10, 0), std::invalid_argument);
}

TEST_CASE("genus bound G") {
  CHECK(p4bound::gp_bound_G(sc(20, 4)) == q(51));
  CHECK(p4bound::gp_bound_G(sc(21, 4)) == q(55));
  CHECK(p4bound::gp_bound_G(sc(10, 1)) == q(36));
  for (std::int64_t d = 1; d <= 150; ++d) {
    for (int s = 1; s <= 9; ++s) CHECK(p4bound::gp_bound_G(sc(d, s)).to_fraction_string() == oracle::G(d, s).str());
  }
}

TEST_CASE("closed chi lower bound") {
  CHECK(p4bound::chi_lower_closed(sc(32, 4)) == q(1109, 4));
  CHECK(p4bound::chi_lower_closed(sc(50, 5)) == q(825));
  CHECK(p4bound::chi_lower_closed(sc(72, 6)) == q(6) * Rational::parse(oracle::c3(oracle::Frac(27, 2)).str()) + q(1) - q(5));
  CHECK_THROWS_AS(p4bound::chi_lower_closed(sc(10, 1)), std::domain_error);
  for (std::int64_t d = 1; d <= 150; ++d) {
    for (int s = 2; s <= 9; ++s) {
      CHECK(p4bound::chi_lower_closed(sc(d, s)).to_fraction_string() == oracle::chi_closed(d, s).str());
    }
  }
}

TEST_CASE("gamma caps") {
  CHECK(p4bound::gamma_ep(sc(32, 4)) == q(36));
  CHECK(p4bound::gamma_ep(sc(50, 5)) == q(80));
  CHECK(p4bound::gamma_ep(sc(17, 1)) == q(0));
  CHECK(p4bound::gamma_dp(sc(32, 4)) == q(208, 5));
  CHECK(p4bound::gamma_dp(sc(50, 5)) == q(50));
  CHECK(p4bound::gamma_dp(sc(60, 6)) == q(30));
  CHECK(p4bound::gamma_cap(sc(32, 4)).combined == q(36));
  CHECK(p4bound::gamma_cap(sc(50, 5)).combined == q(50));
  CHECK(p4bound::gamma_cap(sc(71, 6)).combined == q(71 * 19, 60));
  CHECK(p4bound::gamma_cap(sc(71, 6)).combined.floor() == 22);
  for (std::int64_t d = 1; d <= 150; ++d) {
    for (int s = 1; s <= 9; ++s) {
      const auto caps = p4bound::gamma_cap(sc(d, s));
      CHECK(caps.ep.to_fraction_string() == oracle::gamma_ep(d, s).str());
      CHECK(caps.dp.to_fraction_string() == oracle::gamma_dp(d, s).str());
      CHECK(caps.combined.to_fraction_string() == oracle::gamma_min(d, s).str());
    }
  }
}

TEST_CASE("gamma specializations for s = 4, 5, 6") {
  for (std::int64_t d = 26; d <= 200; ++d) CHECK(p4bound::gamma_cap(sc(d, 4)).combined == q(9 * d, 8));
  for (std::int64_t d = 1; d <= 200; ++d) CHECK(p4bound::gamma_cap(sc(d, 5)).combined == q(d));
  for (std::int64_t d = 1; d <= 90; ++d) CHECK(p4bound::gamma_cap(sc(d, 6)).combined == q(d * (90 - d), 60));
  CHECK(p4bound::gamma_cap(sc(91, 6)).combined.sign() < 0);
}

TEST_CASE("sharpened dp cap subtracts the residue term") {
  const auto s = sc(21, 4);
  CHECK(p4bound::gamma_dp(s, true) == p4bound::gamma_dp(s) - q(1 * 3 * 3, 8));
  CHECK(p4bound::gamma_dp(sc(20, 4), true) == p4bound::gamma_dp(sc(20, 4)));
}

TEST_CASE("sporadic chain start and endpoints") {
  CHECK(p4bound::sporadic_chain_start(sc(32, 4)) == q(11));
  const auto e = p4bound::chain_endpoints(sc(32, 4), q(36), SeriesMode::rational_limit);
  CHECK(e.lower == q(11));
  CHECK(e.first_upper == q(30));
  CHECK(e.second_upper == q(26));
  const auto ei = p4bound::chain_endpoints(sc(33, 4), q(297, 8), SeriesMode::integer);
  CHECK(ei.lower == q(12));
  CHECK(ei.first_upper == q(31));
  CHECK(ei.second_upper.is_integer());
}

TEST_CASE("sporadic weight cap anchors") {
  const Rational a32 = p4bound::sporadic_weight_cap(sc(32, 4), q(36));
  CHECK(a32 == q(7680));
  CHECK(oracle::weight_loop(11, 30) + oracle::weight_loop(11, 26) == 7680);
  CHECK(oracle::weight_loop(11, 30) == 4480);
  CHECK(oracle::weight_loop(11, 26) == 3200);
  const Rational a50 = p4bound::sporadic_weight_cap(sc(50, 5), q(50));
  CHECK(a50 == q(15700));
  CHECK(oracle::weight_loop(14, 48) == 12250);
  CHECK(oracle::weight_loop(14, 28) == 3450);
  // gamma = 22 at s = 6: only the first chain, 22 zeros from d/6 + 5
  CHECK(p4bound::sporadic_weight_cap(sc(78, 6), q(22)) == q(44 * 78 + 3608));
  CHECK(oracle::weight_loop(18, 39) == 44 * 78 + 3608);
  CHECK_THROWS_AS(p4bound::sporadic_weight_cap(sc(78, 6), q(-1)), std::domain_error);
}

TEST_CASE("closed forms for s = 4, 5 at every s-divisible d") {
  for (std::int64_t d = 20; d <= 120; d += 4) {
    if (d % 8 != 0) continue;  // gamma = 9d/8 integral
    const Rational gamma = q(9 * d, 8);
    const auto e = p4bound::chain_endpoints(sc(d, 4), gamma, SeriesMode::rational_limit);
    const Rational brute = q(chain(e.lower, e.first_upper) + chain(e.lower, e.second_upper));
    CHECK(p4bound::sporadic_weight_cap(sc(d, 4), gamma) == brute);
  }
  for (std::int64_t d = 20; d <= 120; d += 4) {
    CHECK(p4bound::sporadic_weight_cap(sc(d, 4), q(9 * d, 8)) == q(243, 32) * q(d * d) - q(9 * d) + q(192));
  }
  for (std::int64_t d = 20; d <= 120; d += 5) {
    const Rational brute = q(oracle::weight_loop(d / 5 + 4, d - 2) + oracle::weight_loop(d / 5 + 4, 2 * d / 5 + 8));
    CHECK(p4bound::sporadic_weight_cap(sc(d, 5), q(d)) == brute);
    CHECK(p4bound::sporadic_weight_cap(sc(d, 5), q(d)) == q(162, 25) * q(d * d) - q(16 * d) + q(300));
  }
}

TEST_CASE("integer mode never exceeds rational-limit mode by more than one term") {
  for (int s = 2; s <= 8; ++s) {
    for (std::int64_t d = (s - 1) * (s - 1) + 2; d <= 200; ++d) {
      const auto surface = sc(d, s);
      const Rational gamma = p4bound::gamma_cap(surface).combined;
      if (gamma.sign() < 0) continue;
      const Rational lim = p4bound::sporadic_weight_cap(surface, gamma, SeriesMode::rational_limit);
      const Rational in = p4bound::sporadic_weight_cap(surface, gamma, SeriesMode::integer);
      CAPTURE(d);
      CAPTURE(s);
      CHECK(in <= lim + q(12 * (d - 2) - 22));
    }
  }
}

TEST_CASE("integer mode sums whole terms") {
  for (std::int64_t d = 11; d <= 120; ++d) {
    const auto surface = sc(d, 4);
    const Rational gamma = p4bound::gamma_cap(surface).combined;
    const auto e = p4bound::chain_endpoints(surface, gamma, SeriesMode::integer);
    const std::int64_t lo = oracle::Frac(d + 12, 4).ceil();
    CHECK(e.lower == q(lo));
    std::int64_t brute = 0;
    for (std::int64_t t = lo; t <= e.first_upper.to_int64(); ++t) brute += 12 * t - 22;
    for (std::int64_t t = lo; t <= e.second_upper.to_int64(); ++t) brute += 12 * t - 22;
    CHECK(p4bound::sporadic_weight_cap(surface, gamma, SeriesMode::integer) == q(brute));
  }
}

TEST_CASE("sporadic profiles") {
  p4bound::SporadicProfile p(10);
  p.add(8, 2);
  p.add(6, 1);
  CHECK(p.total_count() == 3);
  CHECK(p.total_weight() == q(2 * 74 + 50));
  CHECK(p.max_degree() == 8);
  CHECK(p.count_at(7) == 0);
  CHECK_THROWS_AS(p.add(9, 1), std::invalid_argument);
  CHECK_THROWS_AS(p.add(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS(p.add(3, -1), std::invalid_argument);
  CHECK_FALSE(p4bound::SporadicProfile(10).max_degree().has_value());
}

TEST_CASE("series mode names") {
  CHECK(p4bound::parse_series_mode("integer") == SeriesMode::integer);
  CHECK(p4bound::parse_series_mode(p4bound::to_string(SeriesMode::rational_limit)) == SeriesMode::rational_limit);
  CHECK_THROWS_AS(p4bound::parse_series_mode("float"), std::invalid_argument);
}
