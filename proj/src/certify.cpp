#include "p4bound/certify.hpp"

#include "p4bound/binomial.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace p4bound {

std::string_view to_string(GammaRule rule) {
  return rule == GammaRule::uniform_floor ? "uniform-floor" : "pointwise";
}

GammaRule default_gamma_rule(int s) { return s == 6 ? GammaRule::uniform_floor : GammaRule::pointwise; }

Rational uniform_gamma(int s, std::int64_t d_lo, std::int64_t d_hi) {
  if (d_hi < d_lo) throw std::domain_error("uniform_gamma: empty range");
  Rational best = gamma_cap(SurfaceClass(d_lo, s)).combined;
  for (std::int64_t d = d_lo + 1; d <= d_hi; ++d) best = max(best, gamma_cap(SurfaceClass(d, s)).combined);
  return Rational(best.floor());
}

Rational star_main_term(const SurfaceClass& sc) {
  const Rational d(sc.d), s(sc.s);
  return d * d - Rational(5) * d - Rational(10) * (d * d / (Rational(2) * s) + (s - Rational(4)) * d / Rational(2)) +
         Rational(12) * chi_lower_closed(sc);
}

DeficitEvaluation star_deficit(const SurfaceClass& sc, SeriesMode mode, const std::optional<Rational>& gamma) {
  if (sc.s < 2) throw std::domain_error("star_deficit needs s >= 2");
  DeficitEvaluation e;
  e.d = sc.d;
  e.s = sc.s;
  e.in_domain = sc.in_gp_range;
  e.gamma = gamma ? *gamma : gamma_cap(sc).combined;
  e.main_term = star_main_term(sc);
  if (e.gamma.sign() < 0) {
    e.gamma_infeasible = true;
    return e;
  }
  e.weight_cap = sporadic_weight_cap(sc, e.gamma, mode);
  e.deficit = e.main_term - e.weight_cap - Rational(DoublePointConstants::two_k2_max);
  return e;
}

std::string_view to_string(StarVariant v) { return v == StarVariant::as_printed ? "as-printed" : "derived"; }

StarVariant parse_star_variant(std::string_view text) {
  if (text == "derived") return StarVariant::derived;
  if (text == "as-printed" || text == "printed") return StarVariant::as_printed;
  throw std::invalid_argument("unknown polynomial variant '" + std::string(text) + "'");
}

namespace {

constexpr std::int64_t kSexticLo = 71;
constexpr std::int64_t kSexticHi = 90;

RatPolynomial published_star_polynomial(int s) {
  switch (s) {
    case 4: return RatPolynomial{Rational(-195), Rational(7, 2), Rational(-275, 32), Rational(1, 8)};
    case 5: return RatPolynomial{Rational(-318), Rational(4), Rational(-162, 25), Rational(2, 25)};
    case 6: return RatPolynomial{Rational(-7321, 2), Rational(-119, 2), Rational(2, 3), Rational(1, 18)};
    default: throw std::domain_error("no published deficit polynomial for s=" + std::to_string(s));
  }
}

RatPolynomial derived_star_polynomial(int s) {
  const auto d = RatPolynomial::identity();
  const Rational sr(s);
  const auto c = [](const Rational& x) { return RatPolynomial::constant(x); };

  const RatPolynomial main = d * d - Rational(5) * d -
                             Rational(10) * (Rational(1) / (Rational(2) * sr) * d * d + Rational(s - 4, 2) * d) +
                             Rational(12) * (sr * binom_poly3(Rational(1) / sr * d + c(Rational(s - 3, 2))) +
                                             c(Rational(1) - Rational(binom_int(s - 1, 4))));
  const RatPolynomial lower = Rational(1) / sr * d + c(Rational(s - 1));

  RatPolynomial weight;
  if (s == 4 || s == 5) {
    // gamma = 9d/8 (s=4, the [EP] cap) or d (s=5, the double point cap);
    // lower + gamma - 1 >= d - 2 for every d, so the first chain is full.
    const RatPolynomial gamma = s == 4 ? Rational(9, 8) * d : d;
    const RatPolynomial second_upper = gamma - d + Rational(2) * lower;
    weight = weight_series(lower, d - c(2)) + weight_series(lower, second_upper);
  } else {
    // One uniform gamma on 71..90; lower + gamma - 1 < d - 2 there, so only
    // a truncated first chain remains.
    const Rational gamma = uniform_gamma(6, kSexticLo, kSexticHi);
    weight = weight_series(lower, lower + c(gamma - Rational(1)));
  }
  return main - weight - c(Rational(DoublePointConstants::two_k2_max));
}

struct PublishedThreshold {
  int s;
  std::optional<std::int64_t> value;
  std::int64_t witness_lo;  // range must include [witness_lo, witness_hi]
  std::int64_t witness_hi;
};

std::optional<PublishedThreshold> published_threshold(int s) {
  switch (s) {
    case 4: return PublishedThreshold{4, 68, 68, 69};
    case 5: return PublishedThreshold{5, 80, 80, 81};
    case 6: return PublishedThreshold{6, std::nullopt, kSexticLo, kSexticHi};
    default: return std::nullopt;
  }
}

std::string threshold_verdict(const std::optional<std::int64_t>& t) {
  return t ? "d ≤ " + std::to_string(*t) : std::string("excluded: all");
}

std::string render(const std::optional<std::int64_t>& t) { return t ? std::to_string(*t) : std::string("none"); }

std::string bool_str(bool b) { return b ? "true" : "false"; }

Axiom axiom(std::string id, std::string statement, std::string citation) {
  return Axiom{std::move(id), std::move(statement), std::move(citation)};
}

const char* const kCiteEP = "G. Ellingsrud, C. Peskine, Sur les surfaces lisses de P4, Invent. Math. 95 (1989) 1-11";
const char* const kCiteBF =
    "R. Braun, G. Floystad, A bound for the degree of smooth surfaces in P4 not of general type, "
    "Compositio Math. 93 (1994) 211-229";
const char* const kCiteGP =
    "L. Gruson, C. Peskine, Genres des courbes de l'espace projectif, Lecture Notes in Math. 687 (1977) 31-59";
const char* const kCiteH = "R. Hartshorne, Algebraic Geometry, Springer (1977), p. 434";
const char* const kCiteGLP =
    "L. Gruson, R. Lazarsfeld, C. Peskine, On a theorem of Castelnuovo, and the equations defining space "
    "curves, Invent. Math. 72 (1983) 491-506; D. Bayer, M. Stillman, A criterion for detecting m-regularity, "
    "Invent. Math. 87 (1987) 1-11";

std::vector<Axiom> formula_axioms() {
  return {
      axiom("double-point", "d^2 - 5d - 10(pi - 1) + 2(6 chi - K^2) = 0 for a smooth surface in P4", kCiteH),
      axiom("k2-cap", "K^2 <= 9 for a smooth surface in P4 of degree d > 5 not of general type", kCiteBF),
      axiom("not-general-type", "K^2 < 6 chi, hence pi >= (d^2 - 5d + 10)/10", kCiteH),
      axiom("gp-genus", "1 + sum_i (binom(lambda_i,2) + (i-1) lambda_i) <= G(d,s) for d > (s-1)^2 + 1", kCiteGP),
      axiom("bf-chi", "chi >= sum_t (binom3(lambda_t+t-1) - binom3(t-1)) - sum_t alpha_t (t-1), and the sum "
                      "is >= s binom3(d/s + (s-3)/2) + 1 - binom(s-1,4) for s >= 2, d > (s-1)^2 + 1",
            kCiteBF),
      axiom("ep-gamma", "gamma = G(d,s) - pi <= d (s-1)^2 / (2s)", kCiteEP),
      axiom("regularity", "reg(C) <= d - 1 and reg(gin I_C) = reg(I_C), so sporadic zeros lie in degree <= d - 2",
            kCiteGLP),
      axiom("connected-caps", "lambda_0 <= d/s + s - 1 and lambda_1 <= d/s + s - 2 for connected invariants",
            kCiteGP),
  };
}

EvidenceRow deficit_row(const DeficitEvaluation& e) {
  EvidenceRow row{e.d, e.s, {}};
  row.values = {
      {"gamma", e.gamma.to_fraction_string()},
      {"main_term", e.main_term.to_fraction_string()},
      {"weight_cap", e.gamma_infeasible ? std::string("n/a") : e.weight_cap.to_fraction_string()},
      {"deficit", e.gamma_infeasible ? std::string("n/a") : e.deficit.to_fraction_string()},
      {"gamma_infeasible", bool_str(e.gamma_infeasible)},
      {"in_domain", bool_str(e.in_domain)},
      {"excluded", bool_str(e.excluded())},
  };
  return row;
}

std::int64_t parse_int(const std::string& text, std::string_view what) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad integer for " + std::string(what) + ": '" + text + "'");
  }
  return v;
}

const std::string& require_input(const Certificate& c, std::string_view key) {
  const std::string* v = c.input(key);
  if (!v) throw std::invalid_argument("certificate input missing: " + std::string(key));
  return *v;
}

/// Threshold from evidence rows sorted by d: the largest non-excluded d
/// above which everything is excluded.
std::optional<std::int64_t> threshold_from_rows(const std::vector<EvidenceRow>& rows) {
  std::optional<std::int64_t> best;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    const std::string* ex = it->find("excluded");
    if (!ex) throw std::invalid_argument("evidence row without 'excluded'");
    if (*ex == "false") {
      best = it->d;
      break;
    }
  }
  return best;
}

std::string polynomial_coefficients(const RatPolynomial& p) {
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    if (i) out += ";";
    out += p.coefficient(i).to_fraction_string();
  }
  return out;
}

RatPolynomial parse_coefficients(const std::string& text) {
  std::vector<Rational> coeffs;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto semi = rest.find(';');
    coeffs.push_back(Rational::parse(rest.substr(0, semi)));
    if (semi == std::string_view::npos) break;
    rest.remove_prefix(semi + 1);
  }
  return RatPolynomial(std::move(coeffs));
}

}  // namespace

RatPolynomial star_polynomial(int s, StarVariant variant) {
  if (s < 4 || s > 6) throw std::domain_error("star_polynomial: unsupported s=" + std::to_string(s));
  return variant == StarVariant::as_printed ? published_star_polynomial(s) : derived_star_polynomial(s);
}

std::optional<std::int64_t> max_admissible_degree(int s, std::int64_t d_lo, std::int64_t d_hi, SeriesMode mode) {
  return max_admissible_degree(s, d_lo, d_hi, mode, default_gamma_rule(s));
}

std::optional<std::int64_t> max_admissible_degree(int s, std::int64_t d_lo, std::int64_t d_hi, SeriesMode mode,
                                                  GammaRule rule) {
  if (d_hi < d_lo) throw std::domain_error("max_admissible_degree: empty range");
  if (s < 2 || !SurfaceClass(d_lo, s).in_gp_range) {
    throw std::domain_error("max_admissible_degree: need s >= 2 and d_lo > (s-1)^2 + 1");
  }
  std::optional<Rational> gamma;
  if (rule == GammaRule::uniform_floor) gamma = uniform_gamma(s, d_lo, d_hi);
  for (std::int64_t d = d_hi; d >= d_lo; --d) {
    if (!star_deficit(SurfaceClass(d, s), mode, gamma).excluded()) return d;
  }
  return std::nullopt;
}

const std::string* EvidenceRow::find(std::string_view key) const {
  for (const auto& [k, v] : values) {
    if (k == key) return &v;
  }
  return nullptr;
}

const std::string* Certificate::input(std::string_view key) const {
  for (const auto& [k, v] : inputs) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::vector<Axiom> theorem_axioms() {
  std::vector<Axiom> out = {
      axiom("ep-s5", "a smooth surface in P4 not of general type has d <= 90 or s <= 5", kCiteEP),
      axiom("ep-s6", "the same argument run with s = 6 gives d <= 70 or s <= 6", kCiteEP),
      axiom("low-s", "s <= 3 implies d <= 8", kCiteEP),
  };
  for (auto& a : formula_axioms()) out.push_back(std::move(a));
  return out;
}

Certificate certify_threshold(int s, std::int64_t d_lo, std::int64_t d_hi, SeriesMode mode) {
  const GammaRule rule = default_gamma_rule(s);
  const auto threshold = max_admissible_degree(s, d_lo, d_hi, mode, rule);

  Certificate cert;
  cert.scope = "threshold";
  cert.mode = std::string(to_string(mode));
  cert.inputs = {{"s", std::to_string(s)},
                 {"d_lo", std::to_string(d_lo)},
                 {"d_hi", std::to_string(d_hi)},
                 {"gamma_rule", std::string(to_string(rule))}};
  std::optional<Rational> gamma;
  if (rule == GammaRule::uniform_floor) {
    gamma = uniform_gamma(s, d_lo, d_hi);
    cert.inputs.emplace_back("gamma", gamma->to_fraction_string());
  }
  if (s >= 4 && s <= 6) cert.inputs.emplace_back("deficit_polynomial", star_polynomial(s).to_string());
  cert.axioms = formula_axioms();

  for (std::int64_t d = d_lo; d <= d_hi; ++d) cert.evidence.push_back(deficit_row(star_deficit(SurfaceClass(d, s), mode, gamma)));
  cert.verdict = threshold_verdict(threshold);
  cert.inputs.emplace_back("threshold", render(threshold));

  if (const auto published = published_threshold(s)) {
    bool witnessable = false;
    if (published->value) {
      witnessable = d_lo <= published->witness_lo && d_hi >= published->witness_hi;
    } else {
      witnessable = d_lo >= published->witness_lo && d_hi <= published->witness_hi;
    }
    if (witnessable && threshold != published->value) {
      cert.reproduced = false;
      cert.failure = "s=" + std::to_string(s) + " threshold: published " + render(published->value) +
                     ", computed " + render(threshold);
    }
  }
  return cert;
}

Certificate certify_polynomial_scan(StarVariant variant, std::int64_t d_lo, std::int64_t d_hi) {
  if (d_hi < d_lo) throw std::domain_error("certify_polynomial_scan: empty range");
  const RatPolynomial p = star_polynomial(6, variant);

  Certificate cert;
  cert.scope = "polynomial-scan";
  cert.mode = std::string(to_string(SeriesMode::rational_limit));
  cert.inputs = {{"s", "6"},
                 {"d_lo", std::to_string(d_lo)},
                 {"d_hi", std::to_string(d_hi)},
                 {"variant", std::string(to_string(variant))},
                 {"polynomial", p.to_string()},
                 {"coefficients", polynomial_coefficients(p)}};
  cert.axioms = formula_axioms();

  std::optional<std::int64_t> threshold;
  for (std::int64_t d = d_lo; d <= d_hi; ++d) {
    const Rational value = p(Rational(d));
    const bool excluded = value.sign() > 0;
    cert.evidence.push_back(EvidenceRow{d, 6, {{"value", value.to_fraction_string()}, {"excluded", bool_str(excluded)}}});
    if (!excluded) threshold = d;
  }
  // A contradiction scan is only informative when nothing survives.
  cert.verdict = threshold_verdict(threshold_from_rows(cert.evidence));
  if (threshold) {
    cert.reproduced = false;
    cert.failure = "s=6 " + std::string(to_string(variant)) + " polynomial is not positive at d=" +
                   std::to_string(*threshold);
  }
  return cert;
}

namespace {

struct Fold {
  std::string verdict;
  std::vector<EvidenceRow> cases;
  bool reproduced = true;
  std::string failure;
};

/// Combines component verdicts with the axioms. Components are looked up by
/// their recorded inputs, so the same fold serves construction and
/// re-verification.
Fold fold_theorem(const std::vector<Certificate>& components) {
  Fold f;
  auto fail = [&](std::string why) {
    if (f.reproduced) f.failure = std::move(why);
    f.reproduced = false;
  };
  for (const auto& c : components) {
    if (!c.reproduced) fail(c.failure);
  }

  auto find_threshold = [&](int s, std::string_view mode) -> const Certificate* {
    for (const auto& c : components) {
      if (c.scope == "threshold" && c.mode == mode && c.input("s") && *c.input("s") == std::to_string(s)) return &c;
    }
    return nullptr;
  };
  auto threshold_of = [&](const Certificate* c) -> std::optional<std::int64_t> {
    return threshold_from_rows(c->evidence);
  };

  std::optional<std::int64_t> bound4, bound5;
  for (int s : {4, 5}) {
    const Certificate* a = find_threshold(s, to_string(SeriesMode::rational_limit));
    const Certificate* b = find_threshold(s, to_string(SeriesMode::integer));
    if (!a || !b) {
      fail("missing s=" + std::to_string(s) + " threshold component");
      continue;
    }
    const auto ta = threshold_of(a);
    const auto tb = threshold_of(b);
    if (ta != tb) fail("s=" + std::to_string(s) + " threshold differs between series modes");
    (s == 4 ? bound4 : bound5) = ta;
  }

  bool s6_contradiction = true;
  bool saw_s6 = false;
  for (const auto& c : components) {
    if (c.input("s") && *c.input("s") == "6") {
      saw_s6 = true;
      const auto lo = parse_int(require_input(c, "d_lo"), "d_lo");
      const auto hi = parse_int(require_input(c, "d_hi"), "d_hi");
      if (lo > kSexticLo || hi < kSexticHi || threshold_from_rows(c.evidence)) s6_contradiction = false;
    }
  }
  if (!saw_s6 || !s6_contradiction) fail("s=6 contradiction on 71..90 not established");

  // Case analysis on s.
  const std::int64_t low_s = 8;   // axiom low-s
  const std::int64_t s6 = 70;     // ep-s5 caps d at 90, the scan removes 71..90
  const std::int64_t s7up = 70;   // axiom ep-s6
  f.cases = {
      EvidenceRow{low_s, 3, {{"case", "s <= 3"}, {"bound", std::to_string(low_s)}, {"source", "axiom low-s"}}},
      EvidenceRow{bound4.value_or(-1), 4, {{"case", "s = 4"}, {"bound", render(bound4)}, {"source", "threshold scan"}}},
      EvidenceRow{bound5.value_or(-1), 5, {{"case", "s = 5"}, {"bound", render(bound5)}, {"source", "threshold scan"}}},
      EvidenceRow{s6, 6, {{"case", "s = 6"}, {"bound", std::to_string(s6)}, {"source", "axiom ep-s5 + scan 71..90"}}},
      EvidenceRow{s7up, 7, {{"case", "s >= 7"}, {"bound", std::to_string(s7up)}, {"source", "axiom ep-s6"}}},
  };

  if (!f.reproduced || !bound4 || !bound5) {
    if (f.reproduced) fail("threshold scan admitted nothing");
    f.verdict = std::string(kNotReproduced) + ": " + f.failure;
    return f;
  }
  const std::int64_t other = std::max({low_s, *bound4, s6, s7up});
  const std::int64_t overall = std::max(other, *bound5);
  f.verdict = "d ≤ " + std::to_string(other) + ", or s = 5 and d ≤ " + std::to_string(*bound5) + "; hence d ≤ " +
              std::to_string(overall);
  if (f.verdict != kTheoremVerdict) {
    fail("assembled bound differs from the published statement");
    f.verdict = std::string(kNotReproduced) + ": " + f.failure;
  }
  return f;
}

SeriesMode other_mode(SeriesMode m) {
  return m == SeriesMode::rational_limit ? SeriesMode::integer : SeriesMode::rational_limit;
}

StarVariant other_variant(StarVariant v) {
  return v == StarVariant::derived ? StarVariant::as_printed : StarVariant::derived;
}

}  // namespace

Certificate theorem_verdict(const TheoremOptions& options) {
  Certificate cert;
  cert.scope = "theorem";
  cert.mode = std::string(to_string(options.mode));
  cert.inputs = {{"s_cases", "4,5,6"}, {"s6_variant", std::string(to_string(options.s6_variant))}};
  cert.axioms = theorem_axioms();

  for (int s : {4, 5}) {
    const std::int64_t lo = (s - 1) * (s - 1) + 2;
    cert.components.push_back(certify_threshold(s, lo, kDefaultScanLimit, options.mode));
    cert.components.push_back(certify_threshold(s, lo, kDefaultScanLimit, other_mode(options.mode)));
  }
  cert.components.push_back(certify_threshold(6, kSexticLo, kSexticHi, options.mode));
  cert.components.push_back(certify_polynomial_scan(options.s6_variant, kSexticLo, kSexticHi));
  cert.components.push_back(certify_polynomial_scan(other_variant(options.s6_variant), kSexticLo, kSexticHi));

  Fold f = fold_theorem(cert.components);
  cert.evidence = std::move(f.cases);
  cert.verdict = std::move(f.verdict);
  cert.reproduced = f.reproduced;
  cert.failure = std::move(f.failure);
  return cert;
}

namespace {

VerifyOutcome mismatch(const std::string& what) { return VerifyOutcome{false, "", what}; }

VerifyOutcome verify_threshold(const Certificate& c) {
  const int s = static_cast<int>(parse_int(require_input(c, "s"), "s"));
  const auto lo = parse_int(require_input(c, "d_lo"), "d_lo");
  const auto hi = parse_int(require_input(c, "d_hi"), "d_hi");
  const SeriesMode mode = parse_series_mode(c.mode);
  std::optional<Rational> gamma;
  if (const std::string* g = c.input("gamma")) gamma = Rational::parse(*g);
  if (static_cast<std::int64_t>(c.evidence.size()) != hi - lo + 1) return mismatch("evidence does not cover the range");
  for (std::int64_t d = lo; d <= hi; ++d) {
    const EvidenceRow& row = c.evidence[static_cast<std::size_t>(d - lo)];
    const EvidenceRow expect = deficit_row(star_deficit(SurfaceClass(d, s), mode, gamma));
    if (row != expect) return mismatch("evidence at d=" + std::to_string(d) + " does not re-evaluate");
  }
  return VerifyOutcome{true, threshold_verdict(threshold_from_rows(c.evidence)), ""};
}

VerifyOutcome verify_polynomial_scan(const Certificate& c) {
  const RatPolynomial recorded = parse_coefficients(require_input(c, "coefficients"));
  const StarVariant variant = parse_star_variant(require_input(c, "variant"));
  if (recorded != star_polynomial(6, variant)) return mismatch("recorded polynomial differs from star_polynomial");
  const auto lo = parse_int(require_input(c, "d_lo"), "d_lo");
  const auto hi = parse_int(require_input(c, "d_hi"), "d_hi");
  if (static_cast<std::int64_t>(c.evidence.size()) != hi - lo + 1) return mismatch("evidence does not cover the range");
  for (std::int64_t d = lo; d <= hi; ++d) {
    const EvidenceRow& row = c.evidence[static_cast<std::size_t>(d - lo)];
    const std::string* value = row.find("value");
    const std::string* excluded = row.find("excluded");
    if (!value || !excluded || row.d != d) return mismatch("malformed evidence row");
    const Rational v = recorded(Rational(d));
    if (Rational::parse(*value) != v || *excluded != bool_str(v.sign() > 0)) {
      return mismatch("evidence at d=" + std::to_string(d) + " does not re-evaluate");
    }
  }
  return VerifyOutcome{true, threshold_verdict(threshold_from_rows(c.evidence)), ""};
}

}  // namespace

VerifyOutcome verify_certificate(const Certificate& cert) {
  try {
    if (cert.scope == "threshold") {
      auto out = verify_threshold(cert);
      if (out.ok && out.verdict != cert.verdict) return mismatch("verdict does not follow from evidence");
      return out;
    }
    if (cert.scope == "polynomial-scan") {
      auto out = verify_polynomial_scan(cert);
      if (out.ok && out.verdict != cert.verdict) return mismatch("verdict does not follow from evidence");
      return out;
    }
    if (cert.scope == "theorem") {
      for (const auto& component : cert.components) {
        const VerifyOutcome sub = verify_certificate(component);
        if (!sub.ok) return mismatch("component " + component.scope + ": " + sub.message);
      }
      const std::vector<Axiom> expected_axioms = theorem_axioms();
      for (const auto& a : expected_axioms) {
        if (std::find(cert.axioms.begin(), cert.axioms.end(), a) == cert.axioms.end()) {
          return mismatch("axiom missing or altered: " + a.id);
        }
      }
      const Fold f = fold_theorem(cert.components);
      if (f.verdict != cert.verdict) return mismatch("verdict does not follow from components");
      return VerifyOutcome{true, f.verdict, ""};
    }
    return mismatch("unknown scope '" + cert.scope + "'");
  } catch (const std::exception& e) {
    return mismatch(e.what());
  }
}

}  // namespace p4bound
