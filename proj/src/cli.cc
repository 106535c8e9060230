#include "wbcast/cli.h"

#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "wbcast/errors.h"
#include "wbcast/report.h"

namespace wbcast {

namespace {

// Command-line amplitudes are usually typed with a few decimals, e.g. 0.5774,
// so they are renormalized within a looser tolerance than library callers get.
constexpr double kCliNormTolerance = 1e-3;

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulate and verify three-party broadcasting of a five-qubit entangled state", "wbcast"};
  std::string mode = "single";
  std::optional<double> alpha, beta, gamma;
  std::string branch1 = "UUU", branch2 = "UUU";
  bool no_unitaries = false;
  int sweep = 50;
  std::uint64_t seed = 1;
  int grid = 100;
  std::string out_path;
  std::string format = "json";

  app.add_option("mode", mode, "single | branches | sweep | background")
      ->check(CLI::IsMember({"single", "branches", "sweep", "background"}));
  app.add_option("--alpha", alpha, "amplitude on |001>");
  app.add_option("--beta", beta, "amplitude on |010>");
  app.add_option("--gamma", gamma, "amplitude on |100>");
  app.add_option("--branch1", branch1, "round-1 machine outcomes, e.g. UUU");
  app.add_option("--branch2", branch2, "round-2 machine outcomes, e.g. UDD");
  app.add_flag("--no-unitaries", no_unitaries, "skip the local unitary stage");
  app.add_option("--sweep", sweep, "number of random draws (sweep mode)");
  app.add_option("--seed", seed, "generator seed (sweep mode)");
  app.add_option("--grid", grid, "alpha^2 grid points (background mode, >= 100)");
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "wbcast: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    RunRequest request;
    request.mode = ParseMode(mode);
    request.format = ParseFormat(format);
    if (alpha || beta || gamma) {
      if (!(alpha && beta && gamma)) throw InvalidInput("--alpha, --beta and --gamma must be given together");
      request.params = WParams::FromAmplitudes(*alpha, *beta, *gamma, kCliNormTolerance);
    }
    request.branch1 = MachineBranch::Parse(branch1);
    request.branch2 = MachineBranch::Parse(branch2);
    request.apply_unitaries = !no_unitaries;
    if (sweep < 1) throw InvalidInput("--sweep must be at least 1");
    request.sweep_count = sweep;
    request.seed = seed;
    if (grid < 100) throw InvalidInput("--grid must be at least 100");
    request.grid = grid;

    const std::string text = Render(BuildReport(request), request.format);
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw InvalidInput("cannot open " + out_path + " for writing");
      file << text;
      if (!file) throw InvalidInput("failed writing " + out_path);
    }
    return kExitOk;
  } catch (const InvalidInput& e) {
    err << "wbcast: invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const ImpossibleBranch& e) {
    err << "wbcast: impossible branch: " << e.what() << "\n";
    return kExitImpossibleBranch;
  } catch (const InvariantViolation& e) {
    err << "wbcast: internal invariant violated: " << e.what() << "\n";
    return kExitInvariantViolation;
  }
}

}  // namespace wbcast
