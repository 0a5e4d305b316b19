#pragma once

#include "p4bound/bounds.hpp"
#include "p4bound/certify.hpp"
#include "p4bound/invariants.hpp"
#include "p4bound/refine.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace p4bound {

using ordered_json = nlohmann::ordered_json;

/// { scope, inputs, axioms[{id, statement, citation}], evidence[{d, s, ...}],
///   components[...], verdict, reproduced, failure, mode, convention, policy,
///   artifact_version }. Rationals are "p/q" strings.
ordered_json certificate_to_json(const Certificate& cert);
/// Throws std::invalid_argument (or nlohmann::json::exception) on schema errors.
Certificate certificate_from_json(const ordered_json& j);

/// One row of the `scan` table.
struct ScanRow {
  std::int64_t d = 0;
  int s = 0;
  Rational G;
  Rational gamma_ep;
  Rational gamma_dp;
  Rational gamma_cap;
  std::optional<Rational> weight_cap;  ///< absent when gamma_cap < 0
  std::optional<Rational> deficit;
  bool excluded = false;
};

/// Rows for s_lo..s_hi, d_lo..d_hi with d > (s-1)^2 + 1, sorted by (s, d),
/// gamma = gamma_cap(d, s).combined at every d.
std::vector<ScanRow> scan_table(int s_lo, int s_hi, std::int64_t d_lo, std::int64_t d_hi, SeriesMode mode);

/// Header: d,s,G,gamma_ep,gamma_dp,gamma_cap,A_cap,star_deficit,excluded
std::string scan_csv(const std::vector<ScanRow>& rows);
ordered_json scan_json(const std::vector<ScanRow>& rows);

std::string enumerate_csv(const std::vector<ConnectedInvariants>& invs);
ordered_json enumerate_json(const std::vector<ConnectedInvariants>& invs);

ordered_json refine_json(const RefineReport& report);
/// policy,convention,d,s,invariants_checked,budget_infeasible,surviving,excluded_all,convention_sensitive
std::string refine_csv(const std::vector<RefineReport>& reports);
void append_refine_csv_rows(std::string& out, const RefineReport& report);

}  // namespace p4bound
