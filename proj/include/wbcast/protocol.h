#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wbcast/cloner.h"
#include "wbcast/separability.h"
#include "wbcast/tensor.h"

namespace wbcast {

// Real amplitudes of alpha|001> + beta|010> + gamma|100> over qubits (1,2,3).
class WParams {
 public:
  // Renormalizes when |alpha^2+beta^2+gamma^2 - 1| <= tolerance, rejects
  // otherwise.
  static WParams FromAmplitudes(double alpha, double beta, double gamma, double tolerance = 1e-6);
  static WParams Uniform();

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }

  // True when some amplitude is zero, i.e. the input sits on the boundary of
  // the parameter space.
  bool IsDegenerate(double tol = kAlgebraicTol) const;

 private:
  WParams(double a, double b, double g) : alpha_(a), beta_(b), gamma_(g) {}
  double alpha_, beta_, gamma_;
};

struct ProtocolConfig {
  WParams params = WParams::Uniform();
  MachineBranch branch1;
  MachineBranch branch2;
  bool apply_unitaries = true;
};

// A qubit pair as named in the protocol write-up, e.g. (8,6); order matters
// for display only.
struct PairName {
  int first;
  int second;
  std::string ToString() const { return std::to_string(first) + std::to_string(second); }
  friend bool operator==(const PairName&, const PairName&) = default;
  friend auto operator<=>(const PairName&, const PairName&) = default;
};

// Report order: the five cross-party pairs, then the six same-party pairs.
const std::array<PairName, 5>& NonLocalPairs();
const std::array<PairName, 6>& LocalPairs();
std::vector<PairName> AllPairs();
bool IsNonLocal(const PairName& pair);

// What the protocol write-up asserts for a pair: cross-party pairs entangled,
// same-party pairs separable.
Separability PaperClaim(const PairName& pair);

// Display order of the five-qubit register: (1,5,8,6,9).
const Labels& FiveQubitOrder();

struct ClassicalMessage {
  Party sender;
  Party receiver;
  int round;
  MachineOutcome outcome;  // the sender's own machine outcome
};

struct PartyView {
  Party party;
  Labels own_qubits;
  // known[round-1][party]
  std::array<std::array<std::optional<MachineOutcome>, 3>, 2> known;

  bool KnowsEverything() const;
};

struct Exchange {
  std::array<PartyView, 3> views;
  std::vector<ClassicalMessage> messages;
};

struct Transcript {
  ProtocolConfig config;
  StateVector w_state;          // qubits 1,2,3
  StateVector after_round_one;  // 1..6 + round-1 machines
  StateVector after_branch_one; // 1..6
  StateVector after_clone_two;  // 1..9 + round-2 machines
  StateVector after_branch_two; // 1..9
  StateVector final_state;      // after the optional local-unitary stage
  double p1 = 0.0;
  double p2 = 0.0;
  std::vector<ClassicalMessage> messages;
  std::array<PartyView, 3> views;
  DensityMatrix five_qubit;     // canonical order (1,5,6,8,9)
  std::vector<std::pair<PairName, DensityMatrix>> pair_states;
  std::vector<PairVerdict> verdicts;  // same order as pair_states
  bool broadcast_ok = false;
};

StateVector PrepareW(const WParams& params);
StateVector RoundOne(const StateVector& w_state);
MeasuredState BranchSelect(const StateVector& state, const MachineBranch& branch);
StateVector RoundTwo(const StateVector& state);
// Bit flips on Alice's clones 4 and 7, sigma_y on Bob's 2 and Charlie's 3.
StateVector ApplyLocalUnitaries(const StateVector& state);
DensityMatrix FiveQubitState(const StateVector& nine_qubit);
// Two-qubit reduced states in AllPairs() order; each matrix lists the
// pair's labels in the named order.
std::vector<std::pair<PairName, DensityMatrix>> PairStates(const StateVector& nine_qubit);

Exchange ClassicalExchange(const MachineBranch& round1, const MachineBranch& round2);

// Requires every pair of AllPairs() exactly once.
bool BroadcastVerdict(const std::vector<PairVerdict>& verdicts);

Transcript RunProtocol(const ProtocolConfig& config);

// Two-party background check: alpha|00> + beta|11>, each qubit cloned once,
// machines traced out.
struct TwoQubitBroadcast {
  double alpha_sq = 0.0;
  Separability nonlocal_verdict = Separability::kSeparable;  // (original A, clone B)
  Separability local_verdict = Separability::kSeparable;     // (original A, clone A)
  double nonlocal_min_pt = 0.0;
  double local_min_pt = 0.0;
};

TwoQubitBroadcast RunTwoQubitBroadcast(double alpha_sq);

// Points in (0, 1) where the non-local minimum PT eigenvalue changes sign,
// located on a `grid`-point scan and refined by bisection to `tolerance`.
std::vector<double> FindNonLocalBoundaries(int grid, double tolerance = 1e-10);

}  // namespace wbcast
