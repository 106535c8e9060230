#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace wbcast {

enum class Party : std::uint8_t { kAlice = 0, kBob = 1, kCharlie = 2 };

char PartyLetter(Party p);
std::string PartyName(Party p);

// Names one qubit of a register. Data qubits carry the integers 1..9 used
// throughout the protocol (1-3 originals, 4-6 first clones, 7-9 second
// clones); machine qubits are identified by owning party and cloning round.
//
// Ordering is the canonical storage order: data qubits by id, then machine
// qubits by (round, party).
class QubitLabel {
 public:
  static QubitLabel Data(int id);
  static QubitLabel Machine(Party party, int round);

  bool is_data() const { return kind_ == Kind::kData; }
  bool is_machine() const { return kind_ == Kind::kMachine; }
  int data_id() const;
  Party party() const;
  int round() const;

  // "5" for data qubits, "M_B2" for machines.
  std::string ToString() const;

  friend bool operator==(const QubitLabel&, const QubitLabel&) = default;
  friend std::strong_ordering operator<=>(const QubitLabel& a, const QubitLabel& b);

 private:
  enum class Kind : std::uint8_t { kData = 0, kMachine = 1 };
  QubitLabel(Kind kind, int a, int b) : kind_(kind), a_(a), b_(b) {}

  Kind kind_;
  int a_;  // data id, or round for machines
  int b_;  // 0, or party index for machines
};

using Labels = std::vector<QubitLabel>;

// Builds data labels from their ids, in the order given.
Labels DataLabels(std::initializer_list<int> ids);

std::string ToString(const Labels& labels);

}  // namespace wbcast
