#include "wbcast/report.h"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "wbcast/errors.h"

namespace wbcast {

namespace {

constexpr double kProbabilitySumTol = 1e-10;

// ---------------------------------------------------------------------------
// Run records

Json ParamsJson(const WParams& p) { return Json{{"alpha", p.alpha()}, {"beta", p.beta()}, {"gamma", p.gamma()}}; }

void AddProbability(Json& rec, const char* key, double p) {
  rec[key] = p;
  if (auto f = AsFraction(p)) rec[std::string(key) + "_fraction"] = *f;
}

Json PairJson(const PairName& name, const PairVerdict& v) {
  Json j;
  j["pair"] = name.ToString();
  j["kind"] = IsNonLocal(name) ? "non-local" : "local";
  j["min_pt_eigenvalue"] = v.min_pt_eigenvalue;
  j["w3"] = v.w3;
  j["w4"] = v.w4;
  j["negativity"] = v.negativity;
  j["classification"] = ToString(v.classification);
  j["paper_claim"] = v.paper_claim ? Json(ToString(*v.paper_claim)) : Json(nullptr);
  j["agrees_with_paper"] = v.agrees_with_paper ? Json(*v.agrees_with_paper) : Json(nullptr);
  return j;
}

Json RunJson(int index, const Transcript& t) {
  t.five_qubit.Validate();
  for (const auto& [name, rho] : t.pair_states) rho.Validate();
  if (std::abs(t.final_state.norm_squared() - 1.0) > kAlgebraicTol) {
    throw InvariantViolation("final nine-qubit state is not normalized");
  }

  Json rec;
  rec["index"] = index;
  rec["params"] = ParamsJson(t.config.params);
  rec["branch1"] = t.config.branch1.ToString();
  rec["branch2"] = t.config.branch2.ToString();
  rec["apply_unitaries"] = t.config.apply_unitaries;
  AddProbability(rec, "p1", t.p1);
  AddProbability(rec, "p2", t.p2);
  AddProbability(rec, "p1p2", t.p1 * t.p2);

  Json five;
  std::string order;
  for (const auto& l : FiveQubitOrder()) order += l.ToString();
  five["labels"] = order;
  five["trace"] = t.five_qubit.trace();
  five["purity"] = t.five_qubit.purity();
  five["eigenvalues"] = t.five_qubit.Spectrum();
  rec["five_qubit"] = std::move(five);

  Json pairs = Json::array();
  Json disagreeing = Json::array();
  int agree = 0;
  for (size_t i = 0; i < t.verdicts.size(); ++i) {
    const PairName& name = t.pair_states[i].first;
    pairs.push_back(PairJson(name, t.verdicts[i]));
    if (t.verdicts[i].agrees_with_paper.value_or(false)) {
      ++agree;
    } else {
      disagreeing.push_back(name.ToString());
    }
  }
  rec["pairs"] = std::move(pairs);
  rec["broadcast_ok"] = t.broadcast_ok;
  rec["paper_agreement"] = Json{{"agree", agree},
                                {"disagree", static_cast<int>(t.verdicts.size()) - agree},
                                {"disagreeing_pairs", std::move(disagreeing)}};
  Json notes = Json::array();
  if (t.config.params.IsDegenerate()) {
    notes.push_back(
        "degenerate input: an amplitude is zero; the published claims for all parameter values only hold when "
        "alpha, beta, gamma are all nonzero");
  }
  rec["annotations"] = std::move(notes);
  return rec;
}

Json RequestJson(const RunRequest& r) {
  Json j;
  j["mode"] = ToString(r.mode);
  j["params"] = ParamsJson(r.params);
  j["branch1"] = r.branch1.ToString();
  j["branch2"] = r.branch2.ToString();
  j["apply_unitaries"] = r.apply_unitaries;
  j["sweep"] = r.sweep_count;
  j["seed"] = r.seed;
  j["grid"] = r.grid;
  j["format"] = ToString(r.format);
  return j;
}

Json PairSummary(const Json& runs) {
  Json rows = Json::array();
  for (const auto& pair : AllPairs()) {
    int entangled = 0, separable = 0, agree = 0, disagree = 0;
    for (const auto& run : runs) {
      for (const auto& p : run["pairs"]) {
        if (p["pair"] != pair.ToString()) continue;
        (p["classification"] == "ENTANGLED" ? entangled : separable)++;
        (p["agrees_with_paper"] == true ? agree : disagree)++;
      }
    }
    rows.push_back(Json{{"pair", pair.ToString()},
                        {"kind", IsNonLocal(pair) ? "non-local" : "local"},
                        {"paper_claim", ToString(PaperClaim(pair))},
                        {"entangled", entangled},
                        {"separable", separable},
                        {"agree", agree},
                        {"disagree", disagree}});
  }
  return rows;
}

Json BackgroundJson(int grid) {
  if (grid < 100) throw InvalidInput("background mode needs a grid of at least 100 points");
  Json rows = Json::array();
  for (double x : BackgroundGrid(grid)) {
    const TwoQubitBroadcast b = RunTwoQubitBroadcast(x);
    rows.push_back(Json{{"alpha_sq", x},
                        {"nonlocal_min_pt_eigenvalue", b.nonlocal_min_pt},
                        {"local_min_pt_eigenvalue", b.local_min_pt},
                        {"nonlocal_classification", ToString(b.nonlocal_verdict)},
                        {"local_classification", ToString(b.local_verdict)}});
  }
  const double half_width = std::sqrt(39.0) / 16.0;
  Json j;
  j["rows"] = std::move(rows);
  j["endpoints"] = FindNonLocalBoundaries(grid);
  j["reference_endpoints"] = Json::array({0.5 - half_width, 0.5 + half_width});
  return j;
}

// ---------------------------------------------------------------------------
// Rendering helpers

void Indent(std::string& out, int depth) { out.append(static_cast<size_t>(depth) * 2, ' '); }

void DumpValue(const Json& j, std::string& out, int depth) {
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      size_t i = 0;
      for (const auto& [k, v] : j.items()) {
        Indent(out, depth + 1);
        out += Json(k).dump();
        out += ": ";
        DumpValue(v, out, depth + 1);
        if (++i < j.size()) out += ",";
        out += "\n";
      }
      Indent(out, depth);
      out += "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (size_t i = 0; i < j.size(); ++i) {
        Indent(out, depth + 1);
        DumpValue(j[i], out, depth + 1);
        if (i + 1 < j.size()) out += ",";
        out += "\n";
      }
      Indent(out, depth);
      out += "]";
      return;
    }
    case Json::value_t::number_float:
      out += FormatNumber(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

std::string Cell(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return "";
    case Json::value_t::string:
      return j.get<std::string>();
    case Json::value_t::boolean:
      return j.get<bool>() ? "true" : "false";
    case Json::value_t::number_float:
      return FormatNumber(j.get<double>());
    default:
      return j.dump();
  }
}

std::string Pad(std::string s, size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

// ---------------------------------------------------------------------------
// Schema checks

[[noreturn]] void SchemaFail(const std::string& path, const std::string& what) {
  throw InvariantViolation("report schema: " + path + " " + what);
}

const Json& Field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) SchemaFail(path, "is not an object");
  if (!obj.contains(key)) SchemaFail(path + "." + key, "is missing");
  return obj[key];
}

void ExpectNumber(const Json& obj, const std::string& key, const std::string& path) {
  if (!Field(obj, key, path).is_number()) SchemaFail(path + "." + key, "is not a number");
}

void ExpectString(const Json& obj, const std::string& key, const std::string& path) {
  if (!Field(obj, key, path).is_string()) SchemaFail(path + "." + key, "is not a string");
}

void ExpectBool(const Json& obj, const std::string& key, const std::string& path) {
  if (!Field(obj, key, path).is_boolean()) SchemaFail(path + "." + key, "is not a boolean");
}

void ExpectBranch(const Json& obj, const std::string& key, const std::string& path) {
  ExpectString(obj, key, path);
  try {
    MachineBranch::Parse(obj[key].get<std::string>());
  } catch (const InvalidInput&) {
    SchemaFail(path + "." + key, "is not a branch string");
  }
}

void ExpectClassification(const Json& v, const std::string& path, bool nullable) {
  if (nullable && v.is_null()) return;
  if (v != "ENTANGLED" && v != "SEPARABLE") SchemaFail(path, "is not a classification");
}

void ValidateParams(const Json& p, const std::string& path) {
  for (const char* k : {"alpha", "beta", "gamma"}) ExpectNumber(p, k, path);
}

void ValidateRun(const Json& run, const std::string& path) {
  ExpectNumber(run, "index", path);
  ValidateParams(Field(run, "params", path), path + ".params");
  ExpectBranch(run, "branch1", path);
  ExpectBranch(run, "branch2", path);
  ExpectBool(run, "apply_unitaries", path);
  for (const char* k : {"p1", "p2", "p1p2"}) {
    ExpectNumber(run, k, path);
    const double p = run[k].get<double>();
    if (!(p > 0.0 && p <= 1.0)) SchemaFail(path + "." + k, "is not a probability in (0, 1]");
  }
  const Json& five = Field(run, "five_qubit", path);
  ExpectString(five, "labels", path + ".five_qubit");
  ExpectNumber(five, "trace", path + ".five_qubit");
  ExpectNumber(five, "purity", path + ".five_qubit");
  if (!Field(five, "eigenvalues", path + ".five_qubit").is_array() || five["eigenvalues"].size() != 32) {
    SchemaFail(path + ".five_qubit.eigenvalues", "must hold 32 numbers");
  }
  const Json& pairs = Field(run, "pairs", path);
  const auto expected = AllPairs();
  if (!pairs.is_array() || pairs.size() != expected.size()) SchemaFail(path + ".pairs", "must hold 11 pair records");
  for (size_t i = 0; i < pairs.size(); ++i) {
    const std::string pp = path + ".pairs[" + std::to_string(i) + "]";
    const Json& p = pairs[i];
    ExpectString(p, "pair", pp);
    if (p["pair"] != expected[i].ToString()) SchemaFail(pp + ".pair", "is out of order");
    ExpectString(p, "kind", pp);
    if (p["kind"] != (IsNonLocal(expected[i]) ? "non-local" : "local")) SchemaFail(pp + ".kind", "is wrong");
    for (const char* k : {"min_pt_eigenvalue", "w3", "w4", "negativity"}) ExpectNumber(p, k, pp);
    if (p["negativity"].get<double>() < 0.0) SchemaFail(pp + ".negativity", "is negative");
    ExpectClassification(Field(p, "classification", pp), pp + ".classification", false);
    ExpectClassification(Field(p, "paper_claim", pp), pp + ".paper_claim", true);
    const Json& agrees = Field(p, "agrees_with_paper", pp);
    if (!agrees.is_null() && !agrees.is_boolean()) SchemaFail(pp + ".agrees_with_paper", "is not boolean or null");
  }
  ExpectBool(run, "broadcast_ok", path);
  const Json& agreement = Field(run, "paper_agreement", path);
  ExpectNumber(agreement, "agree", path + ".paper_agreement");
  ExpectNumber(agreement, "disagree", path + ".paper_agreement");
  if (!Field(agreement, "disagreeing_pairs", path + ".paper_agreement").is_array()) {
    SchemaFail(path + ".paper_agreement.disagreeing_pairs", "is not an array");
  }
  if (!Field(run, "annotations", path).is_array()) SchemaFail(path + ".annotations", "is not an array");
}

}  // namespace

// ---------------------------------------------------------------------------
// Public API

std::string ToString(Mode m) {
  switch (m) {
    case Mode::kSingle:
      return "single";
    case Mode::kBranches:
      return "branches";
    case Mode::kSweep:
      return "sweep";
    case Mode::kBackground:
      return "background";
  }
  return "?";
}

std::string ToString(Format f) {
  switch (f) {
    case Format::kJson:
      return "json";
    case Format::kCsv:
      return "csv";
    case Format::kText:
      return "text";
  }
  return "?";
}

Mode ParseMode(const std::string& s) {
  for (Mode m : {Mode::kSingle, Mode::kBranches, Mode::kSweep, Mode::kBackground}) {
    if (ToString(m) == s) return m;
  }
  throw InvalidInput("unknown mode '" + s + "'");
}

Format ParseFormat(const std::string& s) {
  for (Format f : {Format::kJson, Format::kCsv, Format::kText}) {
    if (ToString(f) == s) return f;
  }
  throw InvalidInput("unknown format '" + s + "'");
}

std::optional<std::string> AsFraction(double value, int max_denominator) {
  for (int q = 1; q <= max_denominator; ++q) {
    const double p = std::round(value * q);
    if (std::abs(value - p / q) <= 1e-12) {
      return std::to_string(static_cast<long long>(p)) + "/" + std::to_string(q);
    }
  }
  return std::nullopt;
}

std::vector<WParams> SweepDraws(int count, std::uint64_t seed, double min_component) {
  if (count < 1) throw InvalidInput("sweep count must be at least 1");
  std::mt19937_64 rng(seed);
  // std::uniform_real_distribution and std::normal_distribution are not
  // specified bit-for-bit, so build the normals by hand.
  auto uniform = [&rng] { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; };
  auto normal = [&uniform] {
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    return r * std::cos(2.0 * std::numbers::pi * uniform());
  };
  std::vector<WParams> out;
  out.reserve(static_cast<size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    const double a = std::abs(normal()), b = std::abs(normal()), g = std::abs(normal());
    const double n = std::sqrt(a * a + b * b + g * g);
    if (a / n < min_component || b / n < min_component || g / n < min_component) continue;
    out.push_back(WParams::FromAmplitudes(a / n, b / n, g / n));
  }
  return out;
}

std::vector<double> BackgroundGrid(int n) {
  std::vector<double> grid;
  grid.reserve(static_cast<size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) grid.push_back(static_cast<double>(i + 1) / (n + 1));
  return grid;
}

Json BuildReport(const RunRequest& request) {
  Json report;
  report["version"] = kToolVersion;
  report["schema"] = kSchemaVersion;
  report["request"] = RequestJson(request);
  Json runs = Json::array();
  Json summary;

  auto config = [&](const WParams& params, MachineBranch b1, MachineBranch b2) {
    return ProtocolConfig{params, b1, b2, request.apply_unitaries};
  };

  switch (request.mode) {
    case Mode::kSingle:
      runs.push_back(RunJson(0, RunProtocol(config(request.params, request.branch1, request.branch2))));
      break;
    case Mode::kBranches: {
      double total = 0.0;
      int index = 0;
      for (const auto& b1 : AllBranches()) {
        for (const auto& b2 : AllBranches()) {
          const Transcript t = RunProtocol(config(request.params, b1, b2));
          total += t.p1 * t.p2;
          runs.push_back(RunJson(index++, t));
        }
      }
      if (std::abs(total - 1.0) > kProbabilitySumTol) {
        throw InvariantViolation("branch probabilities sum to " + FormatNumber(total));
      }
      summary["probability_sum"] = total;
      break;
    }
    case Mode::kSweep: {
      int index = 0;
      for (const auto& params : SweepDraws(request.sweep_count, request.seed)) {
        runs.push_back(RunJson(index++, RunProtocol(config(params, request.branch1, request.branch2))));
      }
      break;
    }
    case Mode::kBackground:
      report["background"] = BackgroundJson(request.grid);
      break;
  }

  summary["runs"] = static_cast<int>(runs.size());
  int broadcast_ok = 0;
  for (const auto& r : runs) broadcast_ok += r["broadcast_ok"] == true ? 1 : 0;
  summary["broadcast_ok"] = broadcast_ok;
  if (request.mode != Mode::kBackground) summary["pairs"] = PairSummary(runs);
  report["runs"] = std::move(runs);
  report["summary"] = std::move(summary);
  ValidateReport(report);
  return report;
}

void ValidateReport(const Json& report) {
  const std::string root = "$";
  ExpectString(report, "version", root);
  ExpectString(report, "schema", root);
  if (report["schema"] != kSchemaVersion) SchemaFail("$.schema", "has an unknown version");
  const Json& req = Field(report, "request", root);
  ExpectString(req, "mode", "$.request");
  Mode mode;
  try {
    mode = ParseMode(req["mode"].get<std::string>());
  } catch (const InvalidInput&) {
    SchemaFail("$.request.mode", "is not a mode");
  }
  ValidateParams(Field(req, "params", "$.request"), "$.request.params");
  ExpectBranch(req, "branch1", "$.request");
  ExpectBranch(req, "branch2", "$.request");
  ExpectBool(req, "apply_unitaries", "$.request");
  for (const char* k : {"sweep", "seed", "grid"}) ExpectNumber(req, k, "$.request");
  ExpectString(req, "format", "$.request");

  const Json& runs = Field(report, "runs", root);
  if (!runs.is_array()) SchemaFail("$.runs", "is not an array");
  for (size_t i = 0; i < runs.size(); ++i) ValidateRun(runs[i], "$.runs[" + std::to_string(i) + "]");
  const size_t expected_runs = mode == Mode::kSingle     ? 1
                               : mode == Mode::kBranches ? 64
                               : mode == Mode::kSweep    ? req["sweep"].get<size_t>()
                                                         : 0;
  if (runs.size() != expected_runs) SchemaFail("$.runs", "has the wrong number of records");

  const Json& summary = Field(report, "summary", root);
  ExpectNumber(summary, "runs", "$.summary");
  ExpectNumber(summary, "broadcast_ok", "$.summary");
  if (mode == Mode::kBranches) ExpectNumber(summary, "probability_sum", "$.summary");
  if (mode != Mode::kBackground) {
    const Json& rows = Field(summary, "pairs", "$.summary");
    if (!rows.is_array() || rows.size() != AllPairs().size()) SchemaFail("$.summary.pairs", "must hold 11 rows");
  }
  if (mode == Mode::kBackground) {
    const Json& bg = Field(report, "background", root);
    const Json& rows = Field(bg, "rows", "$.background");
    if (!rows.is_array() || rows.size() != req["grid"].get<size_t>()) {
      SchemaFail("$.background.rows", "must hold one row per grid point");
    }
    for (size_t i = 0; i < rows.size(); ++i) {
      const std::string rp = "$.background.rows[" + std::to_string(i) + "]";
      for (const char* k : {"alpha_sq", "nonlocal_min_pt_eigenvalue", "local_min_pt_eigenvalue"}) {
        ExpectNumber(rows[i], k, rp);
      }
      ExpectClassification(Field(rows[i], "nonlocal_classification", rp), rp + ".nonlocal_classification", false);
      ExpectClassification(Field(rows[i], "local_classification", rp), rp + ".local_classification", false);
    }
    if (!Field(bg, "endpoints", "$.background").is_array()) SchemaFail("$.background.endpoints", "is not an array");
    if (!Field(bg, "reference_endpoints", "$.background").is_array()) {
      SchemaFail("$.background.reference_endpoints", "is not an array");
    }
  }
}

std::string FormatNumber(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  if (!std::isfinite(v)) throw InvariantViolation("non-finite number in report");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.14e", v);
  return buf;
}

std::string RenderJson(const Json& report) {
  std::string out;
  DumpValue(report, out, 0);
  out += "\n";
  return out;
}

std::string RenderCsv(const Json& report) {
  std::ostringstream os;
  if (report.contains("background")) {
    os << "row_type,index,alpha_sq,nonlocal_min_pt_eigenvalue,local_min_pt_eigenvalue,nonlocal_classification,"
          "local_classification\n";
    const Json& bg = report["background"];
    for (size_t i = 0; i < bg["rows"].size(); ++i) {
      const Json& r = bg["rows"][i];
      os << "grid," << i << "," << Cell(r["alpha_sq"]) << "," << Cell(r["nonlocal_min_pt_eigenvalue"]) << ","
         << Cell(r["local_min_pt_eigenvalue"]) << "," << Cell(r["nonlocal_classification"]) << ","
         << Cell(r["local_classification"]) << "\n";
    }
    for (size_t i = 0; i < bg["endpoints"].size(); ++i) {
      os << "endpoint," << i << "," << Cell(bg["endpoints"][i]) << ",,,,\n";
    }
    for (size_t i = 0; i < bg["reference_endpoints"].size(); ++i) {
      os << "reference," << i << "," << Cell(bg["reference_endpoints"][i]) << ",,,,\n";
    }
    return os.str();
  }
  os << "run,alpha,beta,gamma,branch1,branch2,apply_unitaries,p1,p2,five_qubit_trace,five_qubit_purity,"
        "broadcast_ok,pair,kind,min_pt_eigenvalue,w3,w4,negativity,classification,paper_claim,agrees_with_paper\n";
  for (const auto& run : report["runs"]) {
    std::ostringstream prefix;
    prefix << Cell(run["index"]) << "," << Cell(run["params"]["alpha"]) << "," << Cell(run["params"]["beta"]) << ","
           << Cell(run["params"]["gamma"]) << "," << Cell(run["branch1"]) << "," << Cell(run["branch2"]) << ","
           << Cell(run["apply_unitaries"]) << "," << Cell(run["p1"]) << "," << Cell(run["p2"]) << ","
           << Cell(run["five_qubit"]["trace"]) << "," << Cell(run["five_qubit"]["purity"]) << ","
           << Cell(run["broadcast_ok"]);
    for (const auto& p : run["pairs"]) {
      os << prefix.str() << "," << Cell(p["pair"]) << "," << Cell(p["kind"]) << "," << Cell(p["min_pt_eigenvalue"])
         << "," << Cell(p["w3"]) << "," << Cell(p["w4"]) << "," << Cell(p["negativity"]) << ","
         << Cell(p["classification"]) << "," << Cell(p["paper_claim"]) << "," << Cell(p["agrees_with_paper"])
         << "\n";
    }
  }
  return os.str();
}

std::string RenderText(const Json& report) {
  std::ostringstream os;
  const Json& req = report["request"];
  os << "wbcast " << report["version"].get<std::string>() << "  mode=" << req["mode"].get<std::string>() << "\n\n";

  if (report.contains("background")) {
    const Json& bg = report["background"];
    os << "Two-qubit broadcasting background check (" << bg["rows"].size() << " grid points)\n";
    os << Pad("alpha^2", 24) << Pad("non-local min PT", 24) << Pad("local min PT", 24) << "non-local\n";
    for (const auto& r : bg["rows"]) {
      os << Pad(Cell(r["alpha_sq"]), 24) << Pad(Cell(r["nonlocal_min_pt_eigenvalue"]), 24)
         << Pad(Cell(r["local_min_pt_eigenvalue"]), 24) << Cell(r["nonlocal_classification"]) << "\n";
    }
    os << "\nnon-local inseparability boundaries:";
    for (const auto& e : bg["endpoints"]) os << " " << Cell(e);
    os << "\nreference interval endpoints:      ";
    for (const auto& e : bg["reference_endpoints"]) os << " " << Cell(e);
    os << "\n";
    return os.str();
  }

  for (const auto& run : report["runs"]) {
    os << "Run " << run["index"].get<int>() << ": alpha=" << Cell(run["params"]["alpha"])
       << " beta=" << Cell(run["params"]["beta"]) << " gamma=" << Cell(run["params"]["gamma"])
       << "  branches " << Cell(run["branch1"]) << "/" << Cell(run["branch2"])
       << (run["apply_unitaries"] == true ? "" : "  (no local unitaries)") << "\n";
    os << "  p1 = " << Cell(run["p1"]);
    if (run.contains("p1_fraction")) os << " (" << Cell(run["p1_fraction"]) << ")";
    os << "   p2 = " << Cell(run["p2"]);
    if (run.contains("p2_fraction")) os << " (" << Cell(run["p2_fraction"]) << ")";
    os << "\n  five-qubit state (" << Cell(run["five_qubit"]["labels"]) << "): trace "
       << Cell(run["five_qubit"]["trace"]) << ", purity " << Cell(run["five_qubit"]["purity"]) << "\n";
    for (const auto& note : run["annotations"]) os << "  note: " << note.get<std::string>() << "\n";
    os << "  published claims comparison\n";
    os << "  " << Pad("pair", 6) << Pad("kind", 11) << Pad("min PT eigenvalue", 24) << Pad("W3", 24) << Pad("W4", 24)
       << Pad("negativity", 24) << Pad("oracle", 11) << Pad("claimed", 11) << "agreement\n";
    for (const auto& p : run["pairs"]) {
      os << "  " << Pad(Cell(p["pair"]), 6) << Pad(Cell(p["kind"]), 11) << Pad(Cell(p["min_pt_eigenvalue"]), 24)
         << Pad(Cell(p["w3"]), 24) << Pad(Cell(p["w4"]), 24) << Pad(Cell(p["negativity"]), 24)
         << Pad(Cell(p["classification"]), 11) << Pad(Cell(p["paper_claim"]), 11)
         << (p["agrees_with_paper"] == true ? "agrees" : "DISAGREES") << "\n";
    }
    os << "  broadcast conditions met: " << (run["broadcast_ok"] == true ? "yes" : "no") << "\n\n";
  }

  const Json& summary = report["summary"];
  os << "Summary: " << summary["runs"].get<int>() << " run(s), broadcast conditions met in "
     << summary["broadcast_ok"].get<int>() << "\n";
  if (summary.contains("probability_sum")) os << "  sum of p1*p2 over branch pairs: " << Cell(summary["probability_sum"]) << "\n";
  os << "  " << Pad("pair", 6) << Pad("kind", 11) << Pad("claimed", 11) << Pad("entangled", 11) << Pad("separable", 11)
     << Pad("agree", 8) << "disagree\n";
  for (const auto& row : summary["pairs"]) {
    os << "  " << Pad(Cell(row["pair"]), 6) << Pad(Cell(row["kind"]), 11) << Pad(Cell(row["paper_claim"]), 11)
       << Pad(Cell(row["entangled"]), 11) << Pad(Cell(row["separable"]), 11) << Pad(Cell(row["agree"]), 8)
       << Cell(row["disagree"]) << (row["disagree"].get<int>() > 0 ? "  DISAGREES" : "") << "\n";
  }
  return os.str();
}

std::string Render(const Json& report, Format format) {
  switch (format) {
    case Format::kJson:
      return RenderJson(report);
    case Format::kCsv:
      return RenderCsv(report);
    case Format::kText:
      return RenderText(report);
  }
  return {};
}

}  // namespace wbcast
