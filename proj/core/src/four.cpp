#include "alphafix/four.hpp"

namespace alphafix {

namespace {

constexpr int index_of(TruthValue v) {
  switch (v) {
    case TruthValue::False: return 0;
    case TruthValue::True: return 1;
    case TruthValue::Unknown: return 2;
    case TruthValue::Inconsistent: return 3;
  }
  return 0;
}

// Rows and columns in F, T, U, I order. Reflexive-transitive closure of the
// covering relations of Figure 1.
constexpr bool kLeqT[4][4] = {
    // F     T     U      I
    {true, true, true, true},     // F
    {false, true, false, false},  // T
    {false, true, true, false},   // U
    {false, true, false, true},   // I
};

constexpr bool kLeqK[4][4] = {
    // F     T      U      I
    {true, false, false, true},  // F
    {false, true, false, true},  // T
    {true, true, true, true},    // U
    {false, false, false, true}, // I
};

template <typename Op>
TruthValue fold(std::span<const TruthValue> xs, TruthValue identity, Op op) {
  TruthValue acc = identity;
  for (TruthValue x : xs) acc = op(acc, x);
  return acc;
}

}  // namespace

bool leq_t(TruthValue a, TruthValue b) { return kLeqT[index_of(a)][index_of(b)]; }
bool leq_k(TruthValue a, TruthValue b) { return kLeqK[index_of(a)][index_of(b)]; }

TruthValue big_join_t(std::span<const TruthValue> xs) {
  return fold(xs, TruthValue::False, truth_join);
}
TruthValue big_meet_t(std::span<const TruthValue> xs) {
  return fold(xs, TruthValue::True, truth_meet);
}
TruthValue big_join_k(std::span<const TruthValue> xs) {
  return fold(xs, TruthValue::Unknown, know_join);
}
TruthValue big_meet_k(std::span<const TruthValue> xs) {
  return fold(xs, TruthValue::Inconsistent, know_meet);
}

char to_char(TruthValue v) {
  switch (v) {
    case TruthValue::False: return 'F';
    case TruthValue::True: return 'T';
    case TruthValue::Unknown: return 'U';
    case TruthValue::Inconsistent: return 'I';
  }
  return '?';
}

std::optional<TruthValue> truth_value_from_char(char c) {
  switch (c) {
    case 'F': return TruthValue::False;
    case 'T': return TruthValue::True;
    case 'U': return TruthValue::Unknown;
    case 'I': return TruthValue::Inconsistent;
    default: return std::nullopt;
  }
}

}  // namespace alphafix
