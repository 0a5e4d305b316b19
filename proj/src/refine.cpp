#include "p4bound/refine.hpp"

#include "p4bound/binomial.hpp"
#include "p4bound/certify.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace p4bound {

SporadicPolicy SporadicPolicy::one() { return {"one", PerDegreeCap::one, DegreeWindow::lambda_cap, Fill::top_down, false}; }

SporadicPolicy SporadicPolicy::two() { return {"two", PerDegreeCap::two, DegreeWindow::lambda_cap, Fill::top_down, false}; }

SporadicPolicy SporadicPolicy::unbounded() {
  return {"unbounded", PerDegreeCap::unbounded, DegreeWindow::lambda_cap, Fill::top_down, false};
}

SporadicPolicy SporadicPolicy::chains() {
  return {"chains", PerDegreeCap::two, DegreeWindow::lambda_cap, Fill::chains, true};
}

std::vector<SporadicPolicy> SporadicPolicy::all() { return {one(), two(), unbounded(), chains()}; }

SporadicPolicy SporadicPolicy::by_name(std::string_view name) {
  for (auto& p : all()) {
    if (p.name == name) return p;
  }
  throw std::invalid_argument("unknown policy '" + std::string(name) + "'");
}

std::int64_t SporadicPolicy::lowest_degree(const SurfaceClass& sc) const {
  return window == DegreeWindow::lambda_cap ? sporadic_chain_start(sc).ceil() : 0;
}

std::string SporadicPolicy::describe() const {
  std::string out = name + "[cap=";
  out += cap == PerDegreeCap::one ? "1" : cap == PerDegreeCap::two ? "2" : "unbounded";
  out += window == DegreeWindow::lambda_cap ? ",window=lambda-cap" : ",window=none";
  out += fill == Fill::chains ? ",fill=chains" : ",fill=top-down";
  if (gamma_limited) out += ",gamma-limited";
  return out + "]";
}

std::string_view to_string(ChiConvention c) { return c == ChiConvention::exact ? "exact" : "paper-literal"; }

ChiConvention parse_chi_convention(std::string_view text) {
  if (text == "exact") return ChiConvention::exact;
  if (text == "paper-literal") return ChiConvention::paper_literal;
  throw std::invalid_argument("unknown chi convention '" + std::string(text) + "'");
}

Rational sporadic_count_budget(const ConnectedInvariants& inv) {
  const std::int64_t d = inv.d();
  return Rational(genus_functional_alt(inv)) - Rational(d * d + 5 * d, 10);
}

namespace {

std::int64_t per_degree(PerDegreeCap cap, std::int64_t n) {
  switch (cap) {
    case PerDegreeCap::one: return std::min<std::int64_t>(1, n);
    case PerDegreeCap::two: return std::min<std::int64_t>(2, n);
    case PerDegreeCap::unbounded: return n;
  }
  return 0;
}

}  // namespace

SporadicProfile best_sporadic_profile(const Rational& budget, std::int64_t d, PerDegreeCap cap,
                                      std::int64_t lowest_degree) {
  if (budget.sign() < 0) throw std::domain_error("max_sporadic_weight: negative budget " + budget.to_string());
  SporadicProfile profile(d);
  std::int64_t left = budget.floor();
  // 12t - 22 > 0 iff t >= 2; weights strictly increase in t, so filling
  // from the top is optimal.
  for (std::int64_t t = d - 2; t >= std::max<std::int64_t>(lowest_degree, 2) && left > 0; --t) {
    const std::int64_t k = per_degree(cap, left);
    profile.add(t, k);
    left -= k;
  }
  return profile;
}

Rational max_sporadic_weight(const Rational& budget, std::int64_t d, PerDegreeCap cap, std::int64_t lowest_degree) {
  return best_sporadic_profile(budget, d, cap, lowest_degree).total_weight();
}

SporadicProfile chain_sporadic_profile(const Rational& count, std::int64_t d, PerDegreeCap cap,
                                       std::int64_t lowest_degree) {
  if (count.sign() < 0) throw std::domain_error("chain_sporadic_profile: negative count");
  SporadicProfile profile(d);
  std::int64_t left = count.floor();
  const std::int64_t lo = std::max<std::int64_t>(lowest_degree, 0);
  if (lo > d - 2) return profile;
  if (cap == PerDegreeCap::unbounded) {
    profile.add(lo, left);
    return profile;
  }
  const int layers = cap == PerDegreeCap::one ? 1 : 2;
  for (int layer = 0; layer < layers && left > 0; ++layer) {
    for (std::int64_t t = lo; t <= d - 2 && left > 0; ++t) {
      profile.add(t, 1);
      --left;
    }
  }
  return profile;
}

namespace {

Rational chi_term(const ConnectedInvariants& inv, ChiConvention convention) {
  if (convention == ChiConvention::exact) return chi_functional(inv);
  Rational total(0);
  std::int64_t i = 0;
  for (std::int64_t part : inv.lambda()) {
    total += binom_poly3(Rational(part + i - 1));
    ++i;
  }
  return total - Rational(binom_int(inv.s() - 1, 4));
}

}  // namespace

RefineCheck refine_check(const ConnectedInvariants& inv, const RefineOptions& options) {
  const std::int64_t d = inv.d();
  const SurfaceClass sc(d, inv.s());
  const SporadicPolicy& policy = options.policy;

  RefineCheck check;
  check.budget = sporadic_count_budget(inv);
  check.chi_term = chi_term(inv, options.convention);
  check.budget_infeasible = check.budget.sign() < 0;

  Rational count = check.budget_infeasible ? Rational(0) : check.budget;
  if (options.zero_budget.contains(std::vector<std::int64_t>(inv.lambda().begin(), inv.lambda().end()))) {
    count = Rational(0);
  }
  if (policy.gamma_limited) {
    const Rational gamma = gamma_cap(sc).combined;
    check.gamma_infeasible = gamma.sign() < 0;
    count = check.gamma_infeasible ? Rational(0) : min(count, Rational(gamma.floor()));
  }
  const std::int64_t lowest = policy.lowest_degree(sc);
  const SporadicProfile profile = policy.fill == Fill::chains
                                      ? chain_sporadic_profile(count, d, policy.cap, lowest)
                                      : best_sporadic_profile(count, d, policy.cap, lowest);
  check.count = Rational(profile.total_count());
  check.weight = profile.total_weight();
  check.deficit = Rational(d * d + 5 * d - DoublePointConstants::two_k2_max) -
                  Rational(10) * Rational(genus_functional_alt(inv)) + Rational(12) * check.chi_term - check.weight;
  check.excluded = check.budget_infeasible || check.gamma_infeasible || check.deficit.sign() > 0;
  return check;
}

Rational refine_deficit(const ConnectedInvariants& inv, const RefineOptions& options) {
  return refine_check(inv, options).deficit;
}

namespace {

RefineResult sweep_cell(std::int64_t d, int s, const RefineSweepOptions& options) {
  RefineResult result;
  result.d = d;
  result.s = s;
  const RefineOptions& ro = options.refine;
  // Literal X is exact X - 1, so its deficit is exact deficit - 12.
  for_each_invariant({d, s, options.connectivity}, [&](const ConnectedInvariants& inv) {
    ++result.invariants_checked;
    const RefineCheck check = refine_check(inv, ro);
    if (check.budget_infeasible) ++result.budget_infeasible;
    if (!check.excluded) result.surviving.push_back(inv);
    if (!check.budget_infeasible && !check.gamma_infeasible) {
      const Rational literal =
          ro.convention == ChiConvention::paper_literal ? check.deficit : check.deficit - Rational(12);
      if (literal > Rational(-12) && literal.sign() <= 0) result.convention_sensitive.push_back(inv);
    }
  });
  result.excluded_all = result.surviving.empty();
  return result;
}

}  // namespace

RefineReport refine_sweep(const RefineSweepOptions& options) {
  if (options.s_min < 2 || options.s_max < options.s_min) throw std::domain_error("refine_sweep: bad s range");
  if (options.d_hi < options.d_lo) throw std::domain_error("refine_sweep: bad d range");

  struct Cell {
    std::int64_t d;
    int s;
  };
  std::vector<Cell> cells;
  for (int s = options.s_min; s <= options.s_max; ++s) {
    for (std::int64_t d = std::max<std::int64_t>(options.d_lo, 1); d <= options.d_hi; ++d) {
      if (SurfaceClass(d, s).in_gp_range) cells.push_back({d, s});
    }
  }

  RefineReport report;
  report.options = options;
  report.results.resize(cells.size());
  unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(cells.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      report.results[i] = sweep_cell(cells[i].d, cells[i].s, options);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }

  RefineSummary& sum = report.summary;
  for (const auto& r : report.results) {
    ++sum.cells;
    sum.invariants_checked += r.invariants_checked;
    sum.convention_sensitive += static_cast<std::int64_t>(r.convention_sensitive.size());
    if (r.excluded_all) continue;
    auto& best_for_s = sum.largest_surviving_by_s[r.s];
    best_for_s = std::max(best_for_s, r.d);
    if (!sum.largest_surviving_d || r.d > *sum.largest_surviving_d) {
      sum.largest_surviving_d = r.d;
      sum.largest_surviving_s = r.s;
    }
    if (r.d == options.d_hi) sum.survives_at_range_end = true;
  }
  sum.attains_published_76 = options.s_max <= 8 && sum.largest_surviving_d == kPublishedRefinedBound;
  return report;
}

}  // namespace p4bound
