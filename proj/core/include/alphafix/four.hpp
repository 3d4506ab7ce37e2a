// Belnap's four-valued logic FOUR with its truth and knowledge orderings.
//
// A value is stored as two evidence bits: bit 0 records evidence for truth,
// bit 1 evidence for falsity. U carries neither, I carries both. Under this
// encoding the knowledge operators are plain bitwise and/or, and the truth
// operators act on the two bits with opposite polarity.

#ifndef ALPHAFIX_FOUR_HPP_
#define ALPHAFIX_FOUR_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>

namespace alphafix {

enum class TruthValue : std::uint8_t {
  Unknown = 0b00,
  True = 0b01,
  False = 0b10,
  Inconsistent = 0b11,
};

// Canonical enumeration order used for exhaustive checks and output.
inline constexpr std::array<TruthValue, 4> kAllTruthValues = {
    TruthValue::False, TruthValue::True, TruthValue::Unknown, TruthValue::Inconsistent};

namespace values {
inline constexpr TruthValue F = TruthValue::False;
inline constexpr TruthValue T = TruthValue::True;
inline constexpr TruthValue U = TruthValue::Unknown;
inline constexpr TruthValue I = TruthValue::Inconsistent;
}  // namespace values

namespace detail {
constexpr std::uint8_t bits(TruthValue v) { return static_cast<std::uint8_t>(v); }
constexpr TruthValue from_bits(unsigned b) { return static_cast<TruthValue>(b & 0b11u); }
constexpr unsigned pos(TruthValue v) { return bits(v) & 1u; }
constexpr unsigned neg(TruthValue v) { return (bits(v) >> 1) & 1u; }
constexpr TruthValue make(unsigned p, unsigned n) { return from_bits(p | (n << 1)); }
}  // namespace detail

/// Meet under the truth ordering (conjunction, ∧).
constexpr TruthValue truth_meet(TruthValue a, TruthValue b) {
  return detail::make(detail::pos(a) & detail::pos(b), detail::neg(a) | detail::neg(b));
}

/// Join under the truth ordering (disjunction, ∨).
constexpr TruthValue truth_join(TruthValue a, TruthValue b) {
  return detail::make(detail::pos(a) | detail::pos(b), detail::neg(a) & detail::neg(b));
}

/// Consensus (⊗): the information both arguments agree on.
constexpr TruthValue know_meet(TruthValue a, TruthValue b) {
  return detail::from_bits(detail::bits(a) & detail::bits(b));
}

/// Gullibility (⊕): accumulates the information of both arguments.
constexpr TruthValue know_join(TruthValue a, TruthValue b) {
  return detail::from_bits(detail::bits(a) | detail::bits(b));
}

constexpr TruthValue negation(TruthValue a) {
  return detail::make(detail::neg(a), detail::pos(a));
}

/// Conflation (-): swaps U and I, fixes F and T.
constexpr TruthValue conflation(TruthValue a) {
  return detail::make(1u - detail::neg(a), 1u - detail::pos(a));
}

// The orderings are written out from the Hasse diagram rather than derived
// from the bit encoding, so that the operator tables above can be checked
// against them independently.
bool leq_t(TruthValue a, TruthValue b);
bool leq_k(TruthValue a, TruthValue b);

// Folds over a finite collection. An empty collection yields the identity of
// the operator: F for ⋁, T for ⋀, U for ⨁, I for ⨂.
TruthValue big_join_t(std::span<const TruthValue> xs);
TruthValue big_meet_t(std::span<const TruthValue> xs);
TruthValue big_join_k(std::span<const TruthValue> xs);
TruthValue big_meet_k(std::span<const TruthValue> xs);

/// One of 'F', 'T', 'U', 'I'.
char to_char(TruthValue v);
std::optional<TruthValue> truth_value_from_char(char c);

}  // namespace alphafix

#endif  // ALPHAFIX_FOUR_HPP_
