// Valuations over FOUR, their pointwise orderings and operators, evaluation
// of ground bodies under a contrajoin v△w, and the set-pair encodings
// (interpretations and pseudo-interpretations) used by the bottom-up
// algorithm.

#ifndef ALPHAFIX_VALUATION_HPP_
#define ALPHAFIX_VALUATION_HPP_

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "alphafix/four.hpp"
#include "alphafix/ground.hpp"

namespace alphafix {

/// Raised when two valuations over different bases are combined or compared,
/// or when an atom outside the base is looked up.
class BaseMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A total map from the atoms of a base to FOUR.
class Valuation {
 public:
  Valuation(AtomTablePtr base, TruthValue fill);
  Valuation(AtomTablePtr base, std::vector<TruthValue> values);

  const AtomTablePtr& base_ptr() const { return base_; }
  const AtomTable& base() const { return *base_; }
  std::size_t size() const { return values_.size(); }

  TruthValue operator[](AtomId id) const { return values_[id]; }
  // Throws BaseMismatch for names outside the base.
  TruthValue at(std::string_view atom) const;
  void set(AtomId id, TruthValue v) { values_[id] = v; }
  const std::vector<TruthValue>& values() const { return values_; }

  bool same_base(const Valuation& other) const;
  // Equal base and equal values. Throws BaseMismatch on different bases.
  friend bool operator==(const Valuation& a, const Valuation& b);

 private:
  AtomTablePtr base_;
  std::vector<TruthValue> values_;
};

/// Every atom of `base` mapped to `alpha`.
Valuation const_valuation(AtomTablePtr base, TruthValue alpha);

// Pointwise orderings. Throw BaseMismatch when the bases differ.
bool leq_t(const Valuation& v, const Valuation& w);
bool leq_k(const Valuation& v, const Valuation& w);

// Pointwise operators.
Valuation truth_meet(const Valuation& v, const Valuation& w);
Valuation truth_join(const Valuation& v, const Valuation& w);
Valuation know_meet(const Valuation& v, const Valuation& w);
Valuation know_join(const Valuation& v, const Valuation& w);
Valuation negation(const Valuation& v);
Valuation conflation(const Valuation& v);

/// Value of `body` under v△w: positive atoms are read from v, a negated atom
/// ¬A evaluates to ¬w(A), and connectives follow the FOUR tables.
TruthValue contrajoin_eval(const Valuation& v, const Valuation& w, const GroundFormula& body);

/// Single-valuation evaluation, i.e. v△v.
inline TruthValue eval(const Valuation& v, const GroundFormula& body) {
  return contrajoin_eval(v, v, body);
}

/// (T, F): atoms considered true and atoms considered false. An atom in both
/// sets is I, in neither is U.
struct Interpretation {
  std::set<AtomId> true_set;
  std::set<AtomId> false_set;

  friend bool operator==(const Interpretation&, const Interpretation&) = default;
};

/// (T, F, T', F'): positive literals are valued by `pos`, negated atoms by
/// the negation of their value in `neg`.
struct PseudoInterpretation {
  Interpretation pos;
  Interpretation neg;
};

TruthValue value_in(const Interpretation& i, AtomId atom);
Interpretation to_interpretation(const Valuation& v);
Valuation from_interpretation(AtomTablePtr base, const Interpretation& i);

/// Evaluates `body` by set membership against a pseudo-interpretation. Agrees
/// with contrajoin_eval(from(j.pos), from(j.neg), body). Throws BaseMismatch
/// if an atom id is not below `base_size`.
TruthValue pseudo_eval(const PseudoInterpretation& j, const GroundFormula& body,
                       std::size_t base_size);

}  // namespace alphafix

#endif  // ALPHAFIX_VALUATION_HPP_
