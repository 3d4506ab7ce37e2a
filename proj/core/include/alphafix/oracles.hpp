// Reference implementations of the classical three-valued semantics of
// conventional programs: the extended Gelfond-Lifschitz transform, the
// well-founded model, the Kripke-Kleene model and brute-force enumeration of
// three-valued stable models. They use their own three-valued evaluator and
// never call into the engine.

#ifndef ALPHAFIX_ORACLES_HPP_
#define ALPHAFIX_ORACLES_HPP_

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "alphafix/ground.hpp"
#include "alphafix/valuation.hpp"

namespace alphafix {

/// Ordered false < unknown < true, so ∧ is min, ∨ is max and ¬ mirrors.
enum class ThreeValue : std::uint8_t { False = 0, Unknown = 1, True = 2 };

using ThreeValuation = std::vector<ThreeValue>;  // indexed by AtomId

class NotConventional : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EnumerationCapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bodies may only use ∧, ∨, atoms, negated atoms and the constants T, F.
bool is_conventional_ground(const GroundProgram& gp);

Valuation to_valuation(const GroundProgram& gp, const ThreeValuation& v);
// Throws std::invalid_argument if `v` contains I.
ThreeValuation to_three_valuation(const Valuation& v);

ThreeValuation gl_transform(const GroundProgram& gp, const ThreeValuation& v);
ThreeValuation well_founded(const GroundProgram& gp);
ThreeValuation kripke_kleene(const GroundProgram& gp);

inline constexpr std::size_t kDefaultEnumerationCap = 10;

/// Every three-valuation fixed by gl_transform, in lexicographic order of
/// the value vectors.
std::vector<ThreeValuation> enumerate_stable_models(const GroundProgram& gp,
                                                    std::size_t max_atoms = kDefaultEnumerationCap);

}  // namespace alphafix

#endif  // ALPHAFIX_ORACLES_HPP_
