#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "wbcast/cloner.h"
#include "wbcast/protocol.h"

namespace wbcast {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchemaVersion = "wbcast-report/1";

enum class Mode { kSingle, kBranches, kSweep, kBackground };
enum class Format { kJson, kCsv, kText };

std::string ToString(Mode m);
std::string ToString(Format f);
Mode ParseMode(const std::string& s);
Format ParseFormat(const std::string& s);

struct RunRequest {
  Mode mode = Mode::kSingle;
  WParams params = WParams::Uniform();
  MachineBranch branch1;
  MachineBranch branch2;
  bool apply_unitaries = true;
  int sweep_count = 50;
  std::uint64_t seed = 1;
  int grid = 100;
  Format format = Format::kJson;
};

// Smallest q <= max_denominator with |value - p/q| <= 1e-12, as "p/q".
std::optional<std::string> AsFraction(double value, int max_denominator = 1000);

// Draws for sweep mode: amplitudes uniform on the positive octant of the unit
// sphere, redrawn until every component is at least `min_component`.
// Deterministic in `seed` across platforms.
std::vector<WParams> SweepDraws(int count, std::uint64_t seed, double min_component = 0.05);

// alpha^2 grid used by background mode: (i + 1) / (n + 1), i = 0..n-1.
std::vector<double> BackgroundGrid(int n);

// Runs the request and assembles the report. Every density matrix is
// validated first; failures throw InvariantViolation and no report is built.
Json BuildReport(const RunRequest& request);

// Structural check against the documented report schema; throws
// InvariantViolation naming the first offending path.
void ValidateReport(const Json& report);

// Numbers are written with 15 significant digits in lowercase scientific
// notation.
std::string RenderJson(const Json& report);
std::string RenderCsv(const Json& report);
std::string RenderText(const Json& report);
std::string Render(const Json& report, Format format);

std::string FormatNumber(double v);

}  // namespace wbcast
