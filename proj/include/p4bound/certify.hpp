#pragma once

#include "p4bound/bounds.hpp"
#include "p4bound/polynomial.hpp"
#include "p4bound/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace p4bound {

/// K^2 <= 9 for smooth surfaces of degree d > 5 in P^4; enters the double
/// point inequality as 18 >= 2K^2.
struct DoublePointConstants {
  static constexpr int k2_max = 9;
  static constexpr int two_k2_max = 2 * k2_max;
};

/// How gamma is chosen at each d of a threshold scan.
enum class GammaRule {
  pointwise,      ///< gamma = gamma_cap(d, s).combined at every d
  uniform_floor,  ///< one integer gamma = floor(max over the range of the cap)
};

std::string_view to_string(GammaRule rule);
/// uniform_floor for s = 6 (the 71..90 argument), pointwise otherwise.
GammaRule default_gamma_rule(int s);

/// floor(max_{d in [d_lo, d_hi]} gamma_cap(d, s).combined).
Rational uniform_gamma(int s, std::int64_t d_lo, std::int64_t d_hi);

/// d^2 - 5d - 10(d^2/(2s) + (s-4)d/2) + 12 chi_lower_closed(d, s): the right
/// side of the double point inequality before the sporadic-zero weight.
Rational star_main_term(const SurfaceClass& sc);

struct DeficitEvaluation {
  std::int64_t d = 0;
  int s = 0;
  Rational gamma;
  Rational weight_cap;
  Rational main_term;
  Rational deficit;  ///< main_term - weight_cap - 18; meaningless if gamma_infeasible
  bool in_domain = false;
  bool gamma_infeasible = false;  ///< gamma < 0: no surface, no clamping

  /// A surface with these (d, s) would need deficit <= 0.
  [[nodiscard]] bool excluded() const { return gamma_infeasible || deficit.sign() > 0; }
};

/// Throws std::domain_error when s < 2. Out-of-range d is evaluated and
/// flagged through in_domain. Without `gamma`, gamma_cap(sc).combined is used.
DeficitEvaluation star_deficit(const SurfaceClass& sc, SeriesMode mode = SeriesMode::rational_limit,
                               const std::optional<Rational>& gamma = std::nullopt);

enum class StarVariant {
  derived,     ///< the -18 from 18 >= 2K^2 included
  as_printed,  ///< the s = 6 cubic exactly as published (constant -7321/2)
};

std::string_view to_string(StarVariant v);
StarVariant parse_star_variant(std::string_view text);

/// The deficit as a cubic in d for s in {4, 5, 6}, built symbolically from
/// the same formulas as star_deficit with the per-s gamma specialization
/// (9d/8, d, and the uniform 22 on 71..90). as_printed differs from
/// derived only for s = 6. Throws std::domain_error for other s.
RatPolynomial star_polynomial(int s, StarVariant variant = StarVariant::derived);

/// Largest d in [d_lo, d_hi] not excluded, with every larger d in the range
/// excluded; nullopt when all are excluded. Throws std::domain_error when
/// the range is empty or d_lo <= (s-1)^2 + 1.
std::optional<std::int64_t> max_admissible_degree(int s, std::int64_t d_lo, std::int64_t d_hi,
                                                  SeriesMode mode = SeriesMode::rational_limit);
std::optional<std::int64_t> max_admissible_degree(int s, std::int64_t d_lo, std::int64_t d_hi, SeriesMode mode,
                                                  GammaRule rule);

/// Default upper end for threshold scans.
inline constexpr std::int64_t kDefaultScanLimit = 200;

// ---------------------------------------------------------------------------
// Certificates

struct Axiom {
  std::string id;
  std::string statement;
  std::string citation;

  friend bool operator==(const Axiom&, const Axiom&) = default;
};

/// Named values in insertion order; rationals are stored as "p/q" strings.
using NamedValues = std::vector<std::pair<std::string, std::string>>;

struct EvidenceRow {
  std::int64_t d = 0;
  int s = 0;
  NamedValues values;

  [[nodiscard]] const std::string* find(std::string_view key) const;
  friend bool operator==(const EvidenceRow&, const EvidenceRow&) = default;
};

struct Certificate {
  std::string scope;  ///< "threshold" | "polynomial-scan" | "theorem"
  NamedValues inputs;
  std::vector<Axiom> axioms;
  std::vector<EvidenceRow> evidence;
  std::vector<Certificate> components;
  std::string verdict;
  bool reproduced = true;  ///< every published value this certificate checks was matched
  std::string failure;     ///< which component did not reproduce, empty otherwise
  std::string mode;
  std::string convention;
  std::string policy;

  [[nodiscard]] const std::string* input(std::string_view key) const;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

inline constexpr std::string_view kArtifactVersion = "1.0.0";

/// The external facts the theorem rests on, with their sources.
std::vector<Axiom> theorem_axioms();

/// Exhaustive scan of star_deficit over [d_lo, d_hi]. Published thresholds
/// (68 for s=4, 80 for s=5, nothing on 71..90 for s=6) are compared when
/// the range can witness them.
Certificate certify_threshold(int s, std::int64_t d_lo, std::int64_t d_hi,
                              SeriesMode mode = SeriesMode::rational_limit);

/// Evaluates star_polynomial(6, variant) on [d_lo, d_hi]; the verdict is
/// "excluded: all" when every value is positive.
Certificate certify_polynomial_scan(StarVariant variant, std::int64_t d_lo = 71, std::int64_t d_hi = 90);

struct TheoremOptions {
  SeriesMode mode = SeriesMode::rational_limit;
  StarVariant s6_variant = StarVariant::derived;
};

inline constexpr std::string_view kTheoremVerdict = "d ≤ 70, or s = 5 and d ≤ 80; hence d ≤ 80";
inline constexpr std::string_view kNotReproduced = "NOT REPRODUCED";

/// Runs every component (s = 4 and s = 5 thresholds in both series modes,
/// the s = 6 scans) and folds them with the axioms into the final bound.
Certificate theorem_verdict(const TheoremOptions& options = {});

struct VerifyOutcome {
  bool ok = false;
  std::string verdict;  ///< verdict re-derived from the evidence
  std::string message;
};

/// Re-evaluates every evidence value from (d, s) and the recorded inputs,
/// then re-derives the verdict from the evidence alone.
VerifyOutcome verify_certificate(const Certificate& cert);

}  // namespace p4bound
