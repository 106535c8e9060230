#include "wbcast/cloner.h"

#include <algorithm>
#include <cmath>

#include "wbcast/errors.h"

namespace wbcast {

char ToChar(MachineOutcome o) { return o == MachineOutcome::kUp ? 'U' : 'D'; }

MachineOutcome MachineBranch::of(Party p) const {
  switch (p) {
    case Party::kAlice:
      return alice;
    case Party::kBob:
      return bob;
    case Party::kCharlie:
      return charlie;
  }
  return alice;
}

std::string MachineBranch::ToString() const { return {ToChar(alice), ToChar(bob), ToChar(charlie)}; }

MachineBranch MachineBranch::Parse(std::string_view s) {
  if (s.size() != 3) throw InvalidInput("branch '" + std::string(s) + "' must have exactly three characters");
  auto one = [&](char c) {
    if (c == 'U') return MachineOutcome::kUp;
    if (c == 'D') return MachineOutcome::kDown;
    throw InvalidInput("branch '" + std::string(s) + "' may only contain U and D");
  };
  return MachineBranch{one(s[0]), one(s[1]), one(s[2])};
}

const std::array<MachineBranch, 8>& AllBranches() {
  static const std::array<MachineBranch, 8> kBranches = {
      MachineBranch::Parse("UUU"), MachineBranch::Parse("UUD"), MachineBranch::Parse("UDD"),
      MachineBranch::Parse("UDU"), MachineBranch::Parse("DUU"), MachineBranch::Parse("DUD"),
      MachineBranch::Parse("DDU"), MachineBranch::Parse("DDD"),
  };
  return kBranches;
}

std::array<CloneAssignment, 3> RoundAssignments(int round) {
  if (round != 1 && round != 2) throw InvalidInput("the protocol has cloning rounds 1 and 2 only");
  const int base = round == 1 ? 0 : 3;
  std::array<CloneAssignment, 3> out{{
      {QubitLabel::Data(base + 1), QubitLabel::Data(base + 4), QubitLabel::Machine(Party::kAlice, round)},
      {QubitLabel::Data(base + 2), QubitLabel::Data(base + 5), QubitLabel::Machine(Party::kBob, round)},
      {QubitLabel::Data(base + 3), QubitLabel::Data(base + 6), QubitLabel::Machine(Party::kCharlie, round)},
  }};
  return out;
}

Operator BhIsometry() {
  const double a = std::sqrt(2.0 / 3.0);
  const double b = 1.0 / std::sqrt(6.0);
  // Row index = source*4 + clone*2 + machine.
  CMatrix m = CMatrix::Zero(8, 2);
  m(0b000, 0) = a;  // |00>|U>
  m(0b011, 0) = b;  // |01>|D>
  m(0b101, 0) = b;  // |10>|D>
  m(0b111, 1) = a;  // |11>|D>
  m(0b010, 1) = b;  // |01>|U>
  m(0b100, 1) = b;  // |10>|U>
  return Operator::Isometry("BH", 1, 3, std::move(m));
}

StateVector CloneQubit(const StateVector& state, const CloneAssignment& assignment) {
  static const Operator kCloner = BhIsometry();
  return ApplyToTargets(state, kCloner, {assignment.source}, {assignment.clone, assignment.machine});
}

MeasuredState MeasureMachines(const StateVector& state, const MachineBranch& branch,
                              const std::array<QubitLabel, 3>& machines) {
  Labels order(machines.begin(), machines.end());
  Labels rest;
  for (const auto& l : state.labels()) {
    if (std::find(machines.begin(), machines.end(), l) == machines.end()) rest.push_back(l);
  }
  if (rest.size() + 3 != state.labels().size()) {
    throw InvalidInput("machine labels " + ToString(order) + " not all in register " + ToString(state.labels()));
  }
  order.insert(order.end(), rest.begin(), rest.end());
  const StateVector arranged = state.Reordered(order);

  const Eigen::Index block = Eigen::Index{1} << rest.size();
  const Eigen::Index outcome = static_cast<Eigen::Index>(branch.alice) * 4 +
                               static_cast<Eigen::Index>(branch.bob) * 2 + static_cast<Eigen::Index>(branch.charlie);
  CVector projected = arranged.amps().segment(outcome * block, block);
  const double p = projected.squaredNorm();
  if (p < kImpossibleBranchProbability) {
    throw ImpossibleBranch("machine branch " + branch.ToString() + " has probability " + std::to_string(p));
  }
  projected /= std::sqrt(p);
  return {StateVector(std::move(rest), std::move(projected)).Canonical(), p};
}

}  // namespace wbcast
