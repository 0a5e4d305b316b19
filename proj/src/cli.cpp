#include "p4bound/cli.hpp"

#include "p4bound/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace p4bound::cli {

IntRange parse_range(const std::string& text) {
  auto to_int = [&](const std::string& part) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) throw std::invalid_argument("bad range '" + text + "'");
    return static_cast<std::int64_t>(v);
  };
  const auto dots = text.find("..");
  IntRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = to_int(text);
  } else {
    r.lo = to_int(text.substr(0, dots));
    r.hi = to_int(text.substr(dots + 2));
  }
  if (r.hi < r.lo) throw std::invalid_argument("empty range '" + text + "'");
  return r;
}

namespace {

const std::string kVerdictPrefix = "verdict: ";

std::string yes_no(bool b) { return b ? "yes" : "no"; }

OutputFormat default_format(Command c) { return c == Command::scan ? OutputFormat::csv : OutputFormat::plain; }

std::string value_or_na(const std::optional<Rational>& r) { return r ? r->to_string() : std::string("n/a"); }

// Evidence values are "p/q" or "n/a"; shown in lowest form.
std::string shown(const std::string* value) {
  if (!value) return "n/a";
  if (*value == "n/a") return *value;
  return Rational::parse(*value).to_string();
}

struct Emitted {
  std::string summary;   ///< human-readable text
  std::string artifact;  ///< JSON or CSV
  int status = kExitReproduced;
};

// ---------------------------------------------------------------- theorem

std::string theorem_summary(const Certificate& cert) {
  std::ostringstream os;
  os << "case analysis on s (smallest degree of a hypersurface containing S):\n";
  for (const auto& row : cert.evidence) {
    os << "  " << std::left << std::setw(7) << *row.find("case") << " d <= " << std::setw(5) << *row.find("bound")
       << " [" << *row.find("source") << "]\n";
  }
  os << "components:\n";
  for (const auto& c : cert.components) {
    os << "  " << c.scope << " s=" << *c.input("s") << " d=" << *c.input("d_lo") << ".." << *c.input("d_hi");
    if (const auto* v = c.input("variant")) os << " variant=" << *v;
    if (c.scope == "threshold") os << " mode=" << c.mode;
    os << ": " << c.verdict << (c.reproduced ? "" : "  [NOT REPRODUCED: " + c.failure + "]") << "\n";
  }
  os << "axioms:\n";
  for (const auto& a : cert.axioms) os << "  " << a.id << ": " << a.statement << "\n";
  os << kVerdictPrefix << cert.verdict << "\n";
  return os.str();
}

Emitted run_theorem(const RunConfig& cfg) {
  const Certificate cert = theorem_verdict({cfg.mode, cfg.s6_variant});
  return {theorem_summary(cert), certificate_to_json(cert).dump(2) + "\n",
          cert.reproduced ? kExitReproduced : kExitNotReproduced};
}

// ---------------------------------------------------------------- certify

Emitted run_certify(const RunConfig& cfg) {
  if (!cfg.s) throw std::invalid_argument("certify needs --s");
  const int s = *cfg.s;
  IntRange range = cfg.d_range.value_or(s == 6 ? IntRange{71, 90}
                                               : IntRange{(s - 1) * (s - 1) + 2, kDefaultScanLimit});
  const Certificate cert = certify_threshold(s, range.lo, range.hi, cfg.mode);
  bool reproduced = cert.reproduced;

  std::ostringstream os;
  os << "s = " << s << ", d in " << range.lo << ".." << range.hi << ", mode " << cert.mode << ", gamma rule "
     << *cert.input("gamma_rule");
  if (const auto* g = cert.input("gamma")) os << " (gamma = " << *g << ")";
  os << "\n";
  if (const auto* p = cert.input("deficit_polynomial")) os << "deficit polynomial: " << *p << "\n";
  os << std::left << std::setw(6) << "d" << std::setw(14) << "gamma" << std::setw(16) << "A_cap" << std::setw(16)
     << "deficit"
     << "excluded\n";
  for (const auto& row : cert.evidence) {
    os << std::setw(6) << row.d << std::setw(14) << shown(row.find("gamma")) << std::setw(16)
       << shown(row.find("weight_cap")) << std::setw(16)
       << shown(row.find("deficit")) << *row.find("excluded") << "\n";
  }
  if (s == 6) {
    for (StarVariant v : {StarVariant::derived, StarVariant::as_printed}) {
      const Certificate scan = certify_polynomial_scan(v, range.lo, range.hi);
      reproduced = reproduced && scan.reproduced;
      os << to_string(v) << " cubic " << *scan.input("polynomial") << ": " << scan.verdict << "\n";
    }
  }
  os << "threshold: " << cert.verdict << "\n";
  if (!cert.reproduced) os << "NOT REPRODUCED: " << cert.failure << "\n";
  return {os.str(), certificate_to_json(cert).dump(2) + "\n", reproduced ? kExitReproduced : kExitNotReproduced};
}

// ---------------------------------------------------------------- scan

Emitted run_scan(const RunConfig& cfg, OutputFormat format) {
  IntRange s_range = cfg.s_range.value_or(cfg.s ? IntRange{*cfg.s, *cfg.s} : IntRange{4, 6});
  IntRange d_range = cfg.d_range.value_or(IntRange{1, 120});
  const auto rows = scan_table(static_cast<int>(s_range.lo), static_cast<int>(s_range.hi), d_range.lo, d_range.hi,
                               cfg.mode);
  std::ostringstream os;
  os << std::left << std::setw(5) << "s" << std::setw(6) << "d" << std::setw(12) << "G" << std::setw(12) << "gamma"
     << std::setw(14) << "A_cap" << std::setw(16) << "deficit"
     << "excluded\n";
  for (const auto& r : rows) {
    os << std::setw(5) << r.s << std::setw(6) << r.d << std::setw(12) << r.G.to_string() << std::setw(12)
       << r.gamma_cap.to_string() << std::setw(14) << value_or_na(r.weight_cap) << std::setw(16)
       << value_or_na(r.deficit) << (r.excluded ? "true" : "false") << "\n";
  }
  std::string artifact = format == OutputFormat::json ? scan_json(rows).dump(2) + "\n" : scan_csv(rows);
  return {os.str(), std::move(artifact), kExitReproduced};
}

// ---------------------------------------------------------------- enumerate

Emitted run_enumerate(const RunConfig& cfg, OutputFormat format) {
  if (!cfg.s || !cfg.d_range || cfg.d_range->lo != cfg.d_range->hi) {
    throw std::invalid_argument("enumerate needs --s N and --d N");
  }
  const auto invs = enumerate_invariants({cfg.d_range->lo, *cfg.s, cfg.connectivity});
  std::ostringstream os;
  os << "d = " << cfg.d_range->lo << ", s = " << *cfg.s << ", connectivity " << to_string(cfg.connectivity) << ": "
     << invs.size() << " sequence(s)\n";
  for (const auto& inv : invs) {
    os << "  " << std::left << std::setw(28) << inv.to_string() << " genus=" << genus_functional(inv)
       << " genus_alt=" << genus_functional_alt(inv) << " chi=" << chi_functional(inv)
       << " count_budget=" << sporadic_count_budget(inv) << "\n";
  }
  std::string artifact = format == OutputFormat::csv ? enumerate_csv(invs) : enumerate_json(invs).dump(2) + "\n";
  return {os.str(), std::move(artifact), kExitReproduced};
}

// ---------------------------------------------------------------- refine

Emitted run_refine(const RunConfig& cfg, OutputFormat format) {
  RefineSweepOptions base;
  if (cfg.s_range) {
    base.s_min = static_cast<int>(cfg.s_range->lo);
    base.s_max = static_cast<int>(cfg.s_range->hi);
  } else if (cfg.s) {
    base.s_min = base.s_max = *cfg.s;
  }
  if (cfg.d_range) {
    base.d_lo = cfg.d_range->lo;
    base.d_hi = cfg.d_range->hi;
  }
  base.connectivity = cfg.connectivity;
  base.threads = cfg.threads;
  for (const auto& z : cfg.zero_budget) base.refine.zero_budget.insert(z);

  std::vector<RefineReport> reports;
  for (SporadicPolicy policy : cfg.policies) {
    if (cfg.window) policy.window = *cfg.window;
    for (ChiConvention conv : cfg.conventions) {
      RefineSweepOptions o = base;
      o.refine.policy = policy;
      o.refine.convention = conv;
      reports.push_back(refine_sweep(o));
    }
  }

  std::ostringstream os;
  os << "refined sweep: s " << base.s_min << ".." << base.s_max << ", d " << base.d_lo << ".." << base.d_hi
     << ", connectivity " << to_string(base.connectivity) << "\n";
  std::string attained;
  for (const auto& r : reports) {
    const auto& sum = r.summary;
    os << "  " << std::left << std::setw(64) << r.options.refine.policy.describe() << std::setw(14)
       << to_string(r.options.refine.convention) << "largest surviving d = "
       << (sum.largest_surviving_d ? std::to_string(*sum.largest_surviving_d) : std::string("none"));
    if (sum.largest_surviving_s) os << " (s=" << *sum.largest_surviving_s << ")";
    if (sum.survives_at_range_end) os << " [survives at range end]";
    os << "; by s:";
    for (const auto& [s, d] : sum.largest_surviving_by_s) os << " " << s << ":" << d;
    os << "; sensitive=" << sum.convention_sensitive << "; attains 76: " << yes_no(sum.attains_published_76) << "\n";
    if (sum.attains_published_76) {
      attained += (attained.empty() ? "" : ", ") + r.options.refine.policy.name + "/" +
                  std::string(to_string(r.options.refine.convention));
    }
  }
  os << "published refined bound d <= 76 (s <= 8) attained by: " << (attained.empty() ? "none" : attained) << "\n";

  std::string artifact;
  if (format == OutputFormat::csv) {
    artifact = refine_csv(reports);
  } else {
    ordered_json j = ordered_json::array();
    for (const auto& r : reports) j.push_back(refine_json(r));
    artifact = j.dump(2) + "\n";
  }
  return {os.str(), std::move(artifact), kExitReproduced};
}

// ---------------------------------------------------------------- verify

Emitted run_verify(const RunConfig& cfg) {
  std::ifstream in(cfg.input_path);
  if (!in) throw std::invalid_argument("cannot open '" + cfg.input_path + "'");
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("not a JSON certificate: ") + e.what());
  }
  const Certificate cert = certificate_from_json(j);
  const VerifyOutcome outcome = verify_certificate(cert);
  std::ostringstream os;
  if (!outcome.ok) {
    os << "verification FAILED: " << outcome.message << "\n";
    return {os.str(), "", kExitNotReproduced};
  }
  os << "re-evaluated " << cert.scope << " certificate\n" << kVerdictPrefix << outcome.verdict << "\n";
  return {os.str(), "", cert.reproduced ? kExitReproduced : kExitNotReproduced};
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("P4BOUND_OUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
  }
  return p;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const OutputFormat format = config.format.value_or(default_format(config.command));
    Emitted e;
    switch (config.command) {
      case Command::theorem: e = run_theorem(config); break;
      case Command::certify: e = run_certify(config); break;
      case Command::scan: e = run_scan(config, format); break;
      case Command::enumerate: e = run_enumerate(config, format); break;
      case Command::refine: e = run_refine(config, format); break;
      case Command::verify: e = run_verify(config); break;
    }
    if (config.output_path && !e.artifact.empty()) {
      const auto path = resolve_output(*config.output_path);
      if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
      std::ofstream file(path);
      if (!file) throw std::runtime_error("cannot write '" + path.string() + "'");
      file << e.artifact;
      out << e.summary;
    } else if (format == OutputFormat::plain || e.artifact.empty()) {
      out << e.summary;
    } else {
      out << e.artifact;
    }
    return e.status;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
}

int main(int argc, char** argv) {
  CLI::App app{"Exact certification of degree bounds for smooth surfaces in P4 not of general type"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string mode = "rational-limit", format, d_text, s_range_text, connectivity = "gap-free";
  std::string variant = "derived", policy = "all", convention = "paper-literal", window;
  std::vector<std::string> acm;
  int s = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json | csv | plain")->check(CLI::IsMember({"json", "csv", "plain"}));
    sub->add_option("--out", cfg.output_path, "write the JSON/CSV artifact here (relative to $P4BOUND_OUT_DIR)");
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", mode, "rational-limit | integer")->check(CLI::IsMember({"rational-limit", "integer"}));
  };

  auto* theorem = app.add_subcommand("theorem", "assemble the full bound certificate");
  add_mode(theorem);
  theorem->add_option("--s6-variant", variant, "derived | as-printed")
      ->check(CLI::IsMember({"derived", "as-printed", "printed"}));
  add_common(theorem);

  auto* certify = app.add_subcommand("certify", "deficit polynomial, per-d evidence and threshold for one s");
  certify->add_option("--s", s, "minimal hypersurface degree (>= 2)")->required();
  certify->add_option("--d", d_text, "degree range LO..HI");
  add_mode(certify);
  add_common(certify);

  auto* scan = app.add_subcommand("scan", "table of every bound quantity over a (d, s) grid");
  scan->add_option("--s", s_range_text, "s or s-range, default 4..6");
  scan->add_option("--d", d_text, "degree range, default 1..120");
  add_mode(scan);
  add_common(scan);

  auto* enumerate = app.add_subcommand("enumerate", "list invariant sequences with their functionals");
  enumerate->add_option("--s", s, "sequence length")->required();
  enumerate->add_option("--d", d_text, "degree")->required();
  enumerate->add_option("--connectivity", connectivity, "none | caps | gap-free")
      ->check(CLI::IsMember({"none", "caps", "gap-free"}));
  add_common(enumerate);

  auto* refine = app.add_subcommand("refine", "per-invariant sweep with sporadic-zero budgets");
  refine->add_option("--s", s_range_text, "s-range, default 2..8");
  refine->add_option("--d", d_text, "degree range, default 1..120");
  refine->add_option("--policy", policy, "one | two | unbounded | chains | all")
      ->check(CLI::IsMember({"one", "two", "unbounded", "chains", "all"}));
  refine->add_option("--convention", convention, "exact | paper-literal | both")
      ->check(CLI::IsMember({"exact", "paper-literal", "both"}));
  refine->add_option("--window", window, "none | lambda-cap (overrides the policy)")
      ->check(CLI::IsMember({"none", "lambda-cap"}));
  refine->add_option("--connectivity", connectivity, "none | caps | gap-free")
      ->check(CLI::IsMember({"none", "caps", "gap-free"}));
  refine->add_option("--acm", acm, "invariant sequence treated as ACM (zero budget), e.g. 5,4,1");
  refine->add_option("--threads", cfg.threads, "worker threads, 0 = all cores");
  add_common(refine);

  auto* verify = app.add_subcommand("verify", "re-evaluate a JSON certificate");
  verify->add_option("file", cfg.input_path, "certificate path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (theorem->parsed()) cfg.command = Command::theorem;
    if (certify->parsed()) cfg.command = Command::certify;
    if (scan->parsed()) cfg.command = Command::scan;
    if (enumerate->parsed()) cfg.command = Command::enumerate;
    if (refine->parsed()) cfg.command = Command::refine;
    if (verify->parsed()) cfg.command = Command::verify;

    cfg.mode = parse_series_mode(mode);
    cfg.s6_variant = parse_star_variant(variant);
    cfg.connectivity = parse_connectivity(connectivity);
    if (s != 0) cfg.s = s;
    if (!d_text.empty()) cfg.d_range = parse_range(d_text);
    if (!s_range_text.empty()) cfg.s_range = parse_range(s_range_text);
    if (!format.empty()) {
      cfg.format = format == "json" ? OutputFormat::json : format == "csv" ? OutputFormat::csv : OutputFormat::plain;
    }
    if (policy != "all") cfg.policies = {SporadicPolicy::by_name(policy)};
    if (convention == "both") {
      cfg.conventions = {ChiConvention::exact, ChiConvention::paper_literal};
    } else {
      cfg.conventions = {parse_chi_convention(convention)};
    }
    if (!window.empty()) cfg.window = window == "none" ? DegreeWindow::none : DegreeWindow::lambda_cap;
    for (const auto& a : acm) {
      const auto inv = ConnectedInvariants::parse(a);
      cfg.zero_budget.emplace_back(inv.lambda().begin(), inv.lambda().end());
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return run(cfg, std::cout, std::cerr);
}

}  // namespace p4bound::cli
