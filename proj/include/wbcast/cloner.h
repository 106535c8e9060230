#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "wbcast/qubit_label.h"
#include "wbcast/tensor.h"

namespace wbcast {

// Machine qubit outcome; UP is |0> of the machine qubit, DOWN is |1>.
enum class MachineOutcome { kUp = 0, kDown = 1 };

char ToChar(MachineOutcome o);  // 'U' / 'D'

// One cloning round's measurement outcomes for Alice, Bob and Charlie.
struct MachineBranch {
  MachineOutcome alice = MachineOutcome::kUp;
  MachineOutcome bob = MachineOutcome::kUp;
  MachineOutcome charlie = MachineOutcome::kUp;

  MachineOutcome of(Party p) const;
  std::string ToString() const;  // e.g. "UDD"
  // Accepts exactly three characters from {U, D}.
  static MachineBranch Parse(std::string_view s);

  friend bool operator==(const MachineBranch&, const MachineBranch&) = default;
};

// The eight branches in measurement-table order:
// UUU, UUD, UDD, UDU, DUU, DUD, DDU, DDD.
const std::array<MachineBranch, 8>& AllBranches();

struct CloneAssignment {
  QubitLabel source;
  QubitLabel clone;
  QubitLabel machine;
};

// Fixed assignments used by the broadcasting protocol: round 1 clones
// 1->4, 2->5, 3->6 and round 2 clones 4->7, 5->8, 6->9, each with the
// owning party's machine for that round.
std::array<CloneAssignment, 3> RoundAssignments(int round);

// Universal 1->2 cloner as a 1->3 qubit isometry with output order
// (source, clone, machine):
//   |0> -> sqrt(2/3)|00>|U> + (|01> + |10>)|D> / sqrt(6)
//   |1> -> sqrt(2/3)|11>|D> + (|01> + |10>)|U> / sqrt(6)
Operator BhIsometry();

StateVector CloneQubit(const StateVector& state, const CloneAssignment& assignment);

struct MeasuredState {
  StateVector state;
  double probability;
};

// Below this the branch is reported as impossible.
inline constexpr double kImpossibleBranchProbability = 1e-14;

// Projects the three machine qubits (Alice's, Bob's, Charlie's) onto the
// branch outcomes, drops them from the register and renormalizes. Throws
// ImpossibleBranch when the branch probability is below
// kImpossibleBranchProbability.
MeasuredState MeasureMachines(const StateVector& state, const MachineBranch& branch,
                              const std::array<QubitLabel, 3>& machines);

}  // namespace wbcast
