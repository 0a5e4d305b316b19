#pragma once

#include "p4bound/bounds.hpp"
#include "p4bound/certify.hpp"
#include "p4bound/invariants.hpp"
#include "p4bound/refine.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace p4bound::cli {

enum class Command { certify, scan, enumerate, refine, theorem, verify };
enum class OutputFormat { json, csv, plain };

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// Parses "LO..HI" or a single integer "N" (meaning N..N).
IntRange parse_range(const std::string& text);

struct RunConfig {
  Command command = Command::theorem;
  std::optional<int> s;
  std::optional<IntRange> s_range;
  std::optional<IntRange> d_range;
  SeriesMode mode = SeriesMode::rational_limit;
  std::vector<ChiConvention> conventions{ChiConvention::paper_literal};
  std::vector<SporadicPolicy> policies = SporadicPolicy::all();
  std::optional<DegreeWindow> window;  ///< overrides every policy's window
  StarVariant s6_variant = StarVariant::derived;
  Connectivity connectivity = Connectivity::gap_free;
  std::vector<std::vector<std::int64_t>> zero_budget;
  std::optional<OutputFormat> format;  ///< per-command default when unset
  std::optional<std::string> output_path;
  std::string input_path;  ///< certificate to verify
  unsigned threads = 0;
};

/// Exit codes.
inline constexpr int kExitReproduced = 0;
inline constexpr int kExitNotReproduced = 1;
inline constexpr int kExitUsage = 2;

/// Executes one command; writes the primary output to `out` (or the file
/// named by output_path) and diagnostics to `err`. Domain errors map to
/// kExitUsage.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and runs. P4BOUND_OUT_DIR, when set, is the
/// directory relative --out paths are resolved against.
int main(int argc, char** argv);

}  // namespace p4bound::cli
