#include "wbcast/protocol.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "wbcast/errors.h"

namespace wbcast {

namespace {

std::array<QubitLabel, 3> MachineTriple(int round) {
  return {QubitLabel::Machine(Party::kAlice, round), QubitLabel::Machine(Party::kBob, round),
          QubitLabel::Machine(Party::kCharlie, round)};
}

Labels Sorted(Labels l) {
  std::sort(l.begin(), l.end());
  return l;
}

void RequireRegister(const StateVector& state, const Labels& expected, const char* stage) {
  if (Sorted(state.labels()) != Sorted(expected)) {
    throw InvalidInput(std::string(stage) + ": expected register " + ToString(Sorted(expected)) + ", got " +
                       ToString(state.labels()));
  }
}

Labels DataRange(int first, int last) {
  Labels out;
  for (int i = first; i <= last; ++i) out.push_back(QubitLabel::Data(i));
  return out;
}

Party OwnerOf(int data_id) {
  // Originals 1,2,3 and their clones 4..9 cycle through A, B, C.
  return static_cast<Party>((data_id - 1) % 3);
}

}  // namespace

// ---------------------------------------------------------------------------
// WParams

WParams WParams::FromAmplitudes(double alpha, double beta, double gamma, double tolerance) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma)) {
    throw InvalidInput("W amplitudes must be finite");
  }
  const double n2 = alpha * alpha + beta * beta + gamma * gamma;
  if (std::abs(n2 - 1.0) > tolerance) {
    throw InvalidInput("W amplitudes have alpha^2+beta^2+gamma^2 = " + std::to_string(n2) +
                       ", outside the renormalization tolerance");
  }
  const double n = std::sqrt(n2);
  return WParams(alpha / n, beta / n, gamma / n);
}

WParams WParams::Uniform() {
  const double a = 1.0 / std::sqrt(3.0);
  return WParams(a, a, a);
}

bool WParams::IsDegenerate(double tol) const {
  return std::abs(alpha_) <= tol || std::abs(beta_) <= tol || std::abs(gamma_) <= tol;
}

// ---------------------------------------------------------------------------
// Pair tables

const std::array<PairName, 5>& NonLocalPairs() {
  static const std::array<PairName, 5> kPairs = {{{1, 5}, {5, 8}, {1, 6}, {6, 9}, {8, 6}}};
  return kPairs;
}

const std::array<PairName, 6>& LocalPairs() {
  static const std::array<PairName, 6> kPairs = {{{1, 7}, {1, 4}, {2, 5}, {2, 8}, {3, 6}, {3, 9}}};
  return kPairs;
}

std::vector<PairName> AllPairs() {
  std::vector<PairName> out(NonLocalPairs().begin(), NonLocalPairs().end());
  out.insert(out.end(), LocalPairs().begin(), LocalPairs().end());
  return out;
}

bool IsNonLocal(const PairName& pair) {
  return std::find(NonLocalPairs().begin(), NonLocalPairs().end(), pair) != NonLocalPairs().end();
}

Separability PaperClaim(const PairName& pair) {
  return IsNonLocal(pair) ? Separability::kEntangled : Separability::kSeparable;
}

const Labels& FiveQubitOrder() {
  static const Labels kOrder = DataLabels({1, 5, 8, 6, 9});
  return kOrder;
}

// ---------------------------------------------------------------------------
// Pipeline stages

StateVector PrepareW(const WParams& params) {
  CVector amps = CVector::Zero(8);
  amps(0b001) = params.alpha();
  amps(0b010) = params.beta();
  amps(0b100) = params.gamma();
  return StateVector(DataLabels({1, 2, 3}), std::move(amps));
}

StateVector RoundOne(const StateVector& w_state) {
  RequireRegister(w_state, DataRange(1, 3), "round one");
  StateVector s = w_state;
  for (const auto& a : RoundAssignments(1)) s = CloneQubit(s, a);
  return s;
}

MeasuredState BranchSelect(const StateVector& state, const MachineBranch& branch) {
  for (int round : {1, 2}) {
    const auto machines = MachineTriple(round);
    if (state.contains(machines[0])) return MeasureMachines(state, branch, machines);
  }
  throw InvalidInput("branch select: register " + ToString(state.labels()) + " holds no machine qubits");
}

StateVector RoundTwo(const StateVector& state) {
  RequireRegister(state, DataRange(1, 6), "round two");
  StateVector s = state;
  for (const auto& a : RoundAssignments(2)) s = CloneQubit(s, a);
  return s;
}

StateVector ApplyLocalUnitaries(const StateVector& state) {
  RequireRegister(state, DataRange(1, 9), "local unitaries");
  static const Operator kX = PauliX();
  static const Operator kY = PauliY();
  StateVector s = ApplyToTargets(state, kX, {QubitLabel::Data(4)});
  s = ApplyToTargets(s, kX, {QubitLabel::Data(7)});
  s = ApplyToTargets(s, kY, {QubitLabel::Data(2)});
  return ApplyToTargets(s, kY, {QubitLabel::Data(3)});
}

DensityMatrix FiveQubitState(const StateVector& nine_qubit) {
  RequireRegister(nine_qubit, DataRange(1, 9), "five-qubit state");
  return PartialTrace(nine_qubit, FiveQubitOrder());
}

std::vector<std::pair<PairName, DensityMatrix>> PairStates(const StateVector& nine_qubit) {
  RequireRegister(nine_qubit, DataRange(1, 9), "pair states");
  std::vector<std::pair<PairName, DensityMatrix>> out;
  for (const auto& pair : AllPairs()) {
    const Labels named = DataLabels({pair.first, pair.second});
    out.emplace_back(pair, PartialTrace(nine_qubit, named).Reordered(named));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classical exchange

bool PartyView::KnowsEverything() const {
  for (const auto& round : known) {
    for (const auto& o : round) {
      if (!o) return false;
    }
  }
  return true;
}

Exchange ClassicalExchange(const MachineBranch& round1, const MachineBranch& round2) {
  Exchange ex;
  constexpr std::array<Party, 3> kParties = {Party::kAlice, Party::kBob, Party::kCharlie};
  for (Party p : kParties) {
    PartyView& v = ex.views[static_cast<size_t>(p)];
    v.party = p;
    for (int id = 1; id <= 9; ++id) {
      if (OwnerOf(id) == p) v.own_qubits.push_back(QubitLabel::Data(id));
    }
    // Each party knows its own measurement outcomes.
    v.known[0][static_cast<size_t>(p)] = round1.of(p);
    v.known[1][static_cast<size_t>(p)] = round2.of(p);
  }
  const std::array<const MachineBranch*, 2> rounds = {&round1, &round2};
  for (int r = 0; r < 2; ++r) {
    for (Party sender : kParties) {
      for (Party receiver : kParties) {
        if (sender == receiver) continue;
        const MachineOutcome o = rounds[static_cast<size_t>(r)]->of(sender);
        ex.messages.push_back({sender, receiver, r + 1, o});
        ex.views[static_cast<size_t>(receiver)].known[static_cast<size_t>(r)][static_cast<size_t>(sender)] = o;
      }
    }
  }
  return ex;
}

// ---------------------------------------------------------------------------
// Verdicts

bool BroadcastVerdict(const std::vector<PairVerdict>& verdicts) {
  std::set<PairName> seen;
  bool ok = true;
  for (const auto& v : verdicts) {
    const PairName pair{v.first.data_id(), v.second.data_id()};
    const auto all = AllPairs();
    if (std::find(all.begin(), all.end(), pair) == all.end()) {
      throw InvalidInput("verdict for unexpected pair " + pair.ToString());
    }
    if (!seen.insert(pair).second) throw InvalidInput("duplicate verdict for pair " + pair.ToString());
    const Separability wanted = IsNonLocal(pair) ? Separability::kEntangled : Separability::kSeparable;
    ok = ok && v.classification == wanted;
  }
  for (const auto& pair : AllPairs()) {
    if (!seen.count(pair)) throw InvalidInput("missing verdict for pair " + pair.ToString());
  }
  return ok;
}

Transcript RunProtocol(const ProtocolConfig& config) {
  StateVector w = PrepareW(config.params);
  StateVector r1 = RoundOne(w);
  MeasuredState m1 = BranchSelect(r1, config.branch1);
  StateVector r2 = RoundTwo(m1.state);
  MeasuredState m2 = BranchSelect(r2, config.branch2);
  StateVector final_state = config.apply_unitaries ? ApplyLocalUnitaries(m2.state) : m2.state;

  DensityMatrix five = FiveQubitState(final_state);
  auto pairs = PairStates(final_state);
  std::vector<PairVerdict> verdicts;
  verdicts.reserve(pairs.size());
  for (const auto& [name, rho] : pairs) verdicts.push_back(WithPaperClaim(PptVerdict(rho), PaperClaim(name)));
  const bool ok = BroadcastVerdict(verdicts);
  Exchange ex = ClassicalExchange(config.branch1, config.branch2);

  return Transcript{config,
                    std::move(w),
                    std::move(r1),
                    m1.state,
                    std::move(r2),
                    m2.state,
                    std::move(final_state),
                    m1.probability,
                    m2.probability,
                    std::move(ex.messages),
                    std::move(ex.views),
                    std::move(five),
                    std::move(pairs),
                    std::move(verdicts),
                    ok};
}

// ---------------------------------------------------------------------------
// Two-qubit background check

TwoQubitBroadcast RunTwoQubitBroadcast(double alpha_sq) {
  if (!(alpha_sq > 0.0 && alpha_sq < 1.0)) {
    throw InvalidInput("alpha^2 must lie strictly between 0 and 1, got " + std::to_string(alpha_sq));
  }
  // Qubit 1 is A's original, 2 is B's; 3 and 4 are their clones.
  const QubitLabel a = QubitLabel::Data(1), b = QubitLabel::Data(2);
  const QubitLabel a_clone = QubitLabel::Data(3), b_clone = QubitLabel::Data(4);
  CVector amps = CVector::Zero(4);
  amps(0b00) = std::sqrt(alpha_sq);
  amps(0b11) = std::sqrt(1.0 - alpha_sq);
  StateVector s({a, b}, std::move(amps));
  s = CloneQubit(s, {a, a_clone, QubitLabel::Machine(Party::kAlice, 1)});
  s = CloneQubit(s, {b, b_clone, QubitLabel::Machine(Party::kBob, 1)});

  const PairVerdict nonlocal = PptVerdict(PartialTrace(s, {a, b_clone}));
  const PairVerdict local = PptVerdict(PartialTrace(s, {a, a_clone}));
  return {alpha_sq, nonlocal.classification, local.classification, nonlocal.min_pt_eigenvalue,
          local.min_pt_eigenvalue};
}

std::vector<double> FindNonLocalBoundaries(int grid, double tolerance) {
  if (grid < 2) throw InvalidInput("boundary scan needs at least two grid points");
  auto negative = [](double x) { return RunTwoQubitBroadcast(x).nonlocal_min_pt < 0.0; };
  std::vector<double> roots;
  double prev_x = 1.0 / (grid + 1);
  bool prev = negative(prev_x);
  for (int i = 1; i < grid; ++i) {
    const double x = static_cast<double>(i + 1) / (grid + 1);
    const bool cur = negative(x);
    if (cur != prev) {
      double lo = prev_x, hi = x;
      while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        (negative(mid) == prev ? lo : hi) = mid;
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_x = x;
    prev = cur;
  }
  return roots;
}

}  // namespace wbcast
