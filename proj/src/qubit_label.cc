#include "wbcast/qubit_label.h"

#include "wbcast/errors.h"

namespace wbcast {

char PartyLetter(Party p) {
  switch (p) {
    case Party::kAlice:
      return 'A';
    case Party::kBob:
      return 'B';
    case Party::kCharlie:
      return 'C';
  }
  return '?';
}

std::string PartyName(Party p) {
  switch (p) {
    case Party::kAlice:
      return "Alice";
    case Party::kBob:
      return "Bob";
    case Party::kCharlie:
      return "Charlie";
  }
  return "?";
}

QubitLabel QubitLabel::Data(int id) {
  if (id < 1) throw InvalidInput("data qubit id must be positive, got " + std::to_string(id));
  return QubitLabel(Kind::kData, id, 0);
}

QubitLabel QubitLabel::Machine(Party party, int round) {
  if (round < 1) throw InvalidInput("machine round must be positive, got " + std::to_string(round));
  return QubitLabel(Kind::kMachine, round, static_cast<int>(party));
}

int QubitLabel::data_id() const {
  if (!is_data()) throw InvalidInput("label " + ToString() + " is not a data qubit");
  return a_;
}

Party QubitLabel::party() const {
  if (!is_machine()) throw InvalidInput("label " + ToString() + " is not a machine qubit");
  return static_cast<Party>(b_);
}

int QubitLabel::round() const {
  if (!is_machine()) throw InvalidInput("label " + ToString() + " is not a machine qubit");
  return a_;
}

std::string QubitLabel::ToString() const {
  if (is_data()) return std::to_string(a_);
  return std::string("M_") + PartyLetter(static_cast<Party>(b_)) + std::to_string(a_);
}

std::strong_ordering operator<=>(const QubitLabel& a, const QubitLabel& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.a_ <=> b.a_; c != 0) return c;
  return a.b_ <=> b.b_;
}

Labels DataLabels(std::initializer_list<int> ids) {
  Labels out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(QubitLabel::Data(id));
  return out;
}

std::string ToString(const Labels& labels) {
  std::string s = "(";
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ",";
    s += labels[i].ToString();
  }
  return s + ")";
}

}  // namespace wbcast
