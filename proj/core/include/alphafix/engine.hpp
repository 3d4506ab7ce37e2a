// Parameterized fixpoint semantics of ground programs over FOUR.
//
// For a default value alpha (the value of every atom that heads no rule):
//
//   psi(v, w)       one step of the immediate-consequence operator: rule
//                   heads get the value of their body under v△w, other
//                   atoms get alpha.
//   psi_prime(w)    the limit of a_0 = const(alpha), a_{n+1} = psi(a_n, w).
//   fix_u / fix_i   the ≤k-least / ≤k-greatest fixpoints of psi_prime.
//   fix_f / fix_t   the ≤t-extreme oscillation points of psi_prime, i.e. the
//                   least and greatest fixpoints of psi_prime∘psi_prime.
//
// Fixpoints of psi_prime are the alpha-fixed models. alpha = F, T, U, I give
// the pessimistic, optimistic, skeptical and inconsistent semantics.
//
// Every loop is bounded by 2·|base|+1 steps: the sequences are monotone in a
// lattice of height 2 per atom, so exceeding the bound is an engine bug and
// raises InternalError.

#ifndef ALPHAFIX_ENGINE_HPP_
#define ALPHAFIX_ENGINE_HPP_

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "alphafix/four.hpp"
#include "alphafix/ground.hpp"
#include "alphafix/valuation.hpp"

namespace alphafix {

/// A violated invariant of the engine (iteration bound, oscillation, or one
/// of the fixpoint identities). Never caused by user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct IterationCounts {
  std::size_t outer = 0;  // psi_prime applications in the outer loops
  std::size_t inner = 0;  // psi applications, summed over all psi_prime calls
};

std::size_t iteration_bound(const GroundProgram& gp);

Valuation psi(const GroundProgram& gp, TruthValue alpha, const Valuation& v, const Valuation& w);

Valuation psi_prime(const GroundProgram& gp, TruthValue alpha, const Valuation& w,
                    IterationCounts* counts = nullptr);

Valuation fix_u(const GroundProgram& gp, TruthValue alpha, IterationCounts* counts = nullptr);
Valuation fix_i(const GroundProgram& gp, TruthValue alpha, IterationCounts* counts = nullptr);

struct OscillationPoints {
  Valuation low;   // Fix_F
  Valuation high;  // Fix_T
};

// Also checks psi_prime(low) = high and psi_prime(high) = low.
OscillationPoints fix_f_t(const GroundProgram& gp, TruthValue alpha,
                          IterationCounts* counts = nullptr);

struct SemanticsResult {
  TruthValue alpha;
  Valuation fix_u;
  Valuation fix_i;
  Valuation fix_f;
  Valuation fix_t;
  IterationCounts counts;
  // Failed identities among Fix_U = Fix_F ⊗ Fix_T, Fix_I = Fix_F ⊕ Fix_T,
  // Fix_F = Fix_U ∧ Fix_I, Fix_T = Fix_U ∨ Fix_I and the orderings
  // Fix_U ≤k Fix_I, Fix_F ≤t Fix_T. Empty when all hold.
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// All four extremal fixpoints for one alpha, with the identities between
/// them checked after the fact.
SemanticsResult solve(const GroundProgram& gp, TruthValue alpha);

/// psi_prime(v) = v.
bool is_alpha_fixed_model(const GroundProgram& gp, TruthValue alpha, const Valuation& v);

/// psi(v, v) = v.
bool is_psi_fixpoint(const GroundProgram& gp, TruthValue alpha, const Valuation& v);

enum class ModelOrientation {
  HeadBelowBody,  // v(A) ≤t v(B) for every rule A ← B
  BodyBelowHead,  // v(B) ≤t v(A) for every rule A ← B
};

bool satisfies_model_inequality(const GroundProgram& gp, const Valuation& v,
                                ModelOrientation orientation = ModelOrientation::HeadBelowBody);

struct ConsensusResult {
  Valuation value;  // fix_u(F) ⊗ fix_u(T)
  bool fixpoint_pessimistic = false;  // fixpoint of psi_prime with alpha = F
  bool fixpoint_optimistic = false;   // fixpoint of psi_prime with alpha = T
  bool model = false;                 // model inequality, head below body
};

ConsensusResult consensus_semantics(const GroundProgram& gp);

struct Relation {
  std::string lhs;
  std::string rhs;
  char order;  // 't' or 'k'
};

struct ComparisonReport {
  // fix_u for alpha = F, T, U, I in that order.
  std::array<Valuation, 4> by_alpha;
  ConsensusResult consensus;
  // Every ordering lhs ≤ rhs that holds between distinct named valuations
  // "F", "T", "U", "I", "consensus".
  std::vector<Relation> relations;
  bool skeptical_below_pessimistic = false;  // Fix_U^U ≤k Fix_U^F
  bool skeptical_below_optimistic = false;   // Fix_U^U ≤k Fix_U^T
  bool skeptical_below_consensus = false;    // Fix_U^U ≤k Fix_U^F ⊗ Fix_U^T

  const Valuation& fix_u(TruthValue alpha) const;
  bool holds(const std::string& lhs, char order, const std::string& rhs) const;
};

ComparisonReport compare_semantics(const GroundProgram& gp);

}  // namespace alphafix

#endif  // ALPHAFIX_ENGINE_HPP_
