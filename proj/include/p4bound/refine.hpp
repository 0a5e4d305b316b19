#pragma once

#include "p4bound/bounds.hpp"
#include "p4bound/invariants.hpp"
#include "p4bound/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace p4bound {

enum class PerDegreeCap { one, two, unbounded };

/// Lowest degree a sporadic zero may sit in.
enum class DegreeWindow {
  none,        ///< any degree (nonpositive weights are never chosen by a maximizer)
  lambda_cap,  ///< from ceil(d/s + s - 1)
};

/// How the counted zeros are laid out over the window.
enum class Fill {
  top_down,  ///< greedy from d - 2 downward: the weight maximizer
  chains,    ///< layered from the window bottom upward, like the aggregate two-chain bound
};

/// Rule for distributing the sporadic-zero count budget across degrees.
struct SporadicPolicy {
  std::string name;
  PerDegreeCap cap = PerDegreeCap::two;
  DegreeWindow window = DegreeWindow::lambda_cap;
  Fill fill = Fill::top_down;
  /// Also cap the count by floor(gamma_cap(d, s).combined), since
  /// sum alpha_t <= G(d,s) - pi = gamma.
  bool gamma_limited = false;

  static SporadicPolicy one();
  static SporadicPolicy two();
  static SporadicPolicy unbounded();
  /// Two chains of one zero per degree from d/s + s - 1 upward, at most
  /// gamma zeros: the layout behind the aggregate bound on A.
  static SporadicPolicy chains();
  static std::vector<SporadicPolicy> all();
  /// "one" | "two" | "unbounded" | "chains"; throws std::invalid_argument.
  static SporadicPolicy by_name(std::string_view name);

  [[nodiscard]] std::int64_t lowest_degree(const SurfaceClass& sc) const;
  /// e.g. "two[window=lambda-cap,fill=top-down]"
  [[nodiscard]] std::string describe() const;
};

enum class ChiConvention {
  exact,          ///< chi_functional(inv), includes the +1 from binom3(-1) = -1
  paper_literal,  ///< sum binom3(lambda_i + i - 1) - binom(s-1, 4)
};

std::string_view to_string(ChiConvention c);
ChiConvention parse_chi_convention(std::string_view text);

/// genus_functional_alt(inv) - (d^2 + 5d)/10. Negative means the sequence is
/// impossible even with no sporadic zeros.
Rational sporadic_count_budget(const ConnectedInvariants& inv);

/// Max of sum alpha_t (12t - 22) over integer profiles with
/// sum alpha_t <= floor(budget), lowest_degree <= t <= d - 2 and at most
/// `cap` zeros per degree. Throws std::domain_error when budget < 0.
SporadicProfile best_sporadic_profile(const Rational& budget, std::int64_t d, PerDegreeCap cap,
                                      std::int64_t lowest_degree = 0);
Rational max_sporadic_weight(const Rational& budget, std::int64_t d, PerDegreeCap cap,
                             std::int64_t lowest_degree = 0);

/// floor(count) zeros placed bottom-up from lowest_degree to d - 2, `cap`
/// layers deep. Zeros that do not fit are dropped.
SporadicProfile chain_sporadic_profile(const Rational& count, std::int64_t d, PerDegreeCap cap,
                                       std::int64_t lowest_degree);

struct RefineCheck {
  Rational budget;  ///< sporadic_count_budget before any policy limit
  Rational count;   ///< zeros actually allocated
  Rational weight;  ///< their total weight
  Rational chi_term;
  Rational deficit;
  bool budget_infeasible = false;
  bool gamma_infeasible = false;
  bool excluded = false;
};

struct RefineOptions {
  SporadicPolicy policy = SporadicPolicy::two();
  ChiConvention convention = ChiConvention::exact;
  /// Invariant sequences treated as arithmetically Cohen-Macaulay: their
  /// budget is forced to zero.
  std::set<std::vector<std::int64_t>> zero_budget;
};

RefineCheck refine_check(const ConnectedInvariants& inv, const RefineOptions& options);

/// d^2 + 5d - 18 - 10 genus_functional_alt + 12 X - W, with X the chosen
/// chi convention and W the policy's sporadic weight. Positive excludes.
Rational refine_deficit(const ConnectedInvariants& inv, const RefineOptions& options);

struct RefineResult {
  std::int64_t d = 0;
  int s = 0;
  std::int64_t invariants_checked = 0;
  std::int64_t budget_infeasible = 0;
  std::vector<ConnectedInvariants> surviving;
  /// Invariants whose exclusion flips between the two chi conventions
  /// (paper-literal deficit in (-12, 0]).
  std::vector<ConnectedInvariants> convention_sensitive;
  bool excluded_all = true;
};

struct RefineSweepOptions {
  int s_min = 2;
  int s_max = 8;
  std::int64_t d_lo = 1;
  std::int64_t d_hi = 120;
  Connectivity connectivity = Connectivity::gap_free;
  RefineOptions refine;
  unsigned threads = 0;  ///< 0: hardware concurrency
};

struct RefineSummary {
  std::optional<std::int64_t> largest_surviving_d;
  std::optional<int> largest_surviving_s;
  std::map<int, std::int64_t> largest_surviving_by_s;
  bool survives_at_range_end = false;
  bool attains_published_76 = false;  ///< largest surviving d over 2 <= s <= 8 is exactly 76
  std::int64_t cells = 0;
  std::int64_t invariants_checked = 0;
  std::int64_t convention_sensitive = 0;
};

struct RefineReport {
  RefineSweepOptions options;
  std::vector<RefineResult> results;  ///< sorted by (s, d)
  RefineSummary summary;
};

inline constexpr std::int64_t kPublishedRefinedBound = 76;

/// Sweeps every (d, s) with s_min <= s <= s_max, d_lo <= d <= d_hi and
/// d > (s-1)^2 + 1. Output is independent of the thread count.
RefineReport refine_sweep(const RefineSweepOptions& options);

}  // namespace p4bound
