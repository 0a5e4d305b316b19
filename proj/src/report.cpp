#include "p4bound/report.hpp"

#include <sstream>
#include <stdexcept>

namespace p4bound {

namespace {

ordered_json named_values_to_json(const NamedValues& values) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : values) j[k] = v;
  return j;
}

NamedValues named_values_from_json(const ordered_json& j, std::initializer_list<std::string_view> skip = {}) {
  if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
  NamedValues out;
  for (const auto& [k, v] : j.items()) {
    bool skipped = false;
    for (auto s : skip) skipped = skipped || k == s;
    if (skipped) continue;
    if (!v.is_string()) throw std::invalid_argument("value for '" + k + "' must be a string");
    out.emplace_back(k, v.get<std::string>());
  }
  return out;
}

std::string opt(const std::optional<Rational>& r) { return r ? r->to_fraction_string() : std::string(); }

std::string lambda_list(const std::vector<ConnectedInvariants>& invs) {
  std::string out;
  for (const auto& inv : invs) {
    if (!out.empty()) out += " ";
    out += inv.to_string();
  }
  return out;
}

}  // namespace

ordered_json certificate_to_json(const Certificate& cert) {
  ordered_json j;
  j["scope"] = cert.scope;
  j["inputs"] = named_values_to_json(cert.inputs);
  j["axioms"] = ordered_json::array();
  for (const auto& a : cert.axioms) {
    j["axioms"].push_back({{"id", a.id}, {"statement", a.statement}, {"citation", a.citation}});
  }
  j["evidence"] = ordered_json::array();
  for (const auto& row : cert.evidence) {
    ordered_json r;
    r["d"] = row.d;
    r["s"] = row.s;
    for (const auto& [k, v] : row.values) r[k] = v;
    j["evidence"].push_back(std::move(r));
  }
  j["components"] = ordered_json::array();
  for (const auto& c : cert.components) j["components"].push_back(certificate_to_json(c));
  j["verdict"] = cert.verdict;
  j["reproduced"] = cert.reproduced;
  j["failure"] = cert.failure;
  j["mode"] = cert.mode;
  j["convention"] = cert.convention;
  j["policy"] = cert.policy;
  j["artifact_version"] = std::string(kArtifactVersion);
  return j;
}

Certificate certificate_from_json(const ordered_json& j) {
  Certificate cert;
  cert.scope = j.at("scope").get<std::string>();
  cert.inputs = named_values_from_json(j.at("inputs"));
  for (const auto& a : j.at("axioms")) {
    cert.axioms.push_back(Axiom{a.at("id").get<std::string>(), a.at("statement").get<std::string>(),
                                a.at("citation").get<std::string>()});
  }
  for (const auto& r : j.at("evidence")) {
    EvidenceRow row;
    row.d = r.at("d").get<std::int64_t>();
    row.s = r.at("s").get<int>();
    row.values = named_values_from_json(r, {"d", "s"});
    cert.evidence.push_back(std::move(row));
  }
  if (j.contains("components")) {
    for (const auto& c : j.at("components")) cert.components.push_back(certificate_from_json(c));
  }
  cert.verdict = j.at("verdict").get<std::string>();
  cert.reproduced = j.value("reproduced", true);
  cert.failure = j.value("failure", std::string());
  cert.mode = j.value("mode", std::string());
  cert.convention = j.value("convention", std::string());
  cert.policy = j.value("policy", std::string());
  return cert;
}

std::vector<ScanRow> scan_table(int s_lo, int s_hi, std::int64_t d_lo, std::int64_t d_hi, SeriesMode mode) {
  std::vector<ScanRow> rows;
  for (int s = std::max(s_lo, 2); s <= s_hi; ++s) {
    for (std::int64_t d = std::max<std::int64_t>(d_lo, 1); d <= d_hi; ++d) {
      const SurfaceClass sc(d, s);
      if (!sc.in_gp_range) continue;
      const GammaCaps caps = gamma_cap(sc);
      const DeficitEvaluation e = star_deficit(sc, mode, caps.combined);
      ScanRow row{d, s, gp_bound_G(sc), caps.ep, caps.dp, caps.combined, std::nullopt, std::nullopt, e.excluded()};
      if (!e.gamma_infeasible) {
        row.weight_cap = e.weight_cap;
        row.deficit = e.deficit;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "d,s,G,gamma_ep,gamma_dp,gamma_cap,A_cap,star_deficit,excluded\n";
  for (const auto& r : rows) {
    os << r.d << ',' << r.s << ',' << r.G.to_fraction_string() << ',' << r.gamma_ep.to_fraction_string() << ','
       << r.gamma_dp.to_fraction_string() << ',' << r.gamma_cap.to_fraction_string() << ',' << opt(r.weight_cap)
       << ',' << opt(r.deficit) << ',' << (r.excluded ? "true" : "false") << '\n';
  }
  return os.str();
}

ordered_json scan_json(const std::vector<ScanRow>& rows) {
  ordered_json j = ordered_json::array();
  for (const auto& r : rows) {
    j.push_back({{"d", r.d},
                 {"s", r.s},
                 {"G", r.G.to_fraction_string()},
                 {"gamma_ep", r.gamma_ep.to_fraction_string()},
                 {"gamma_dp", r.gamma_dp.to_fraction_string()},
                 {"gamma_cap", r.gamma_cap.to_fraction_string()},
                 {"A_cap", opt(r.weight_cap)},
                 {"star_deficit", opt(r.deficit)},
                 {"excluded", r.excluded}});
  }
  return j;
}

std::string enumerate_csv(const std::vector<ConnectedInvariants>& invs) {
  std::ostringstream os;
  os << "lambda,d,s,genus,genus_alt,chi,count_budget\n";
  for (const auto& inv : invs) {
    os << '"' << inv.to_string() << "\"," << inv.d() << ',' << inv.s() << ',' << genus_functional(inv) << ','
       << genus_functional_alt(inv) << ',' << chi_functional(inv).to_fraction_string() << ','
       << sporadic_count_budget(inv).to_fraction_string() << '\n';
  }
  return os.str();
}

ordered_json enumerate_json(const std::vector<ConnectedInvariants>& invs) {
  ordered_json j = ordered_json::array();
  for (const auto& inv : invs) {
    j.push_back({{"lambda", std::vector<std::int64_t>(inv.lambda().begin(), inv.lambda().end())},
                 {"d", inv.d()},
                 {"s", inv.s()},
                 {"genus", genus_functional(inv)},
                 {"genus_alt", genus_functional_alt(inv)},
                 {"chi", chi_functional(inv).to_fraction_string()},
                 {"count_budget", sporadic_count_budget(inv).to_fraction_string()}});
  }
  return j;
}

ordered_json refine_json(const RefineReport& report) {
  const auto& o = report.options;
  const auto& sum = report.summary;
  ordered_json j;
  j["policy"] = o.refine.policy.describe();
  j["convention"] = std::string(to_string(o.refine.convention));
  j["connectivity"] = std::string(to_string(o.connectivity));
  j["s_range"] = {o.s_min, o.s_max};
  j["d_range"] = {o.d_lo, o.d_hi};
  ordered_json s_summary = ordered_json::object();
  for (const auto& [s, d] : sum.largest_surviving_by_s) s_summary[std::to_string(s)] = d;
  j["summary"] = {{"largest_surviving_d", sum.largest_surviving_d ? ordered_json(*sum.largest_surviving_d) : ordered_json()},
                  {"largest_surviving_s", sum.largest_surviving_s ? ordered_json(*sum.largest_surviving_s) : ordered_json()},
                  {"largest_surviving_by_s", s_summary},
                  {"survives_at_range_end", sum.survives_at_range_end},
                  {"attains_published_76", sum.attains_published_76},
                  {"cells", sum.cells},
                  {"invariants_checked", sum.invariants_checked},
                  {"convention_sensitive", sum.convention_sensitive}};
  j["results"] = ordered_json::array();
  for (const auto& r : report.results) {
    ordered_json row{{"d", r.d},
                     {"s", r.s},
                     {"invariants_checked", r.invariants_checked},
                     {"budget_infeasible", r.budget_infeasible},
                     {"excluded_all", r.excluded_all},
                     {"surviving", ordered_json::array()},
                     {"convention_sensitive", ordered_json::array()}};
    for (const auto& inv : r.surviving) row["surviving"].push_back(inv.to_string());
    for (const auto& inv : r.convention_sensitive) row["convention_sensitive"].push_back(inv.to_string());
    j["results"].push_back(std::move(row));
  }
  return j;
}

void append_refine_csv_rows(std::string& out, const RefineReport& report) {
  const std::string policy = report.options.refine.policy.name;
  const std::string convention(to_string(report.options.refine.convention));
  std::ostringstream os;
  for (const auto& r : report.results) {
    os << policy << ',' << convention << ',' << r.d << ',' << r.s << ',' << r.invariants_checked << ','
       << r.budget_infeasible << ",\"" << lambda_list(r.surviving) << "\"," << (r.excluded_all ? "true" : "false")
       << ",\"" << lambda_list(r.convention_sensitive) << "\"\n";
  }
  out += os.str();
}

std::string refine_csv(const std::vector<RefineReport>& reports) {
  std::string out =
      "policy,convention,d,s,invariants_checked,budget_infeasible,surviving,excluded_all,convention_sensitive\n";
  for (const auto& r : reports) append_refine_csv_rows(out, r);
  return out;
}

}  // namespace p4bound
