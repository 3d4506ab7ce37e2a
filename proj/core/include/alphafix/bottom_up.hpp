// Set-based bottom-up computation of the alpha-fixed semantics.
//
// Written as a direct transcription of the published pseudocode: an outer
// loop accumulating (Res_True, Res_False) and an inner loop computing one
// application of psi_prime by classifying every rule head into the T, F and I
// buckets under a pseudo-interpretation. It shares no evaluation code with
// the engine, so the two act as cross-checks of each other.

#ifndef ALPHAFIX_BOTTOM_UP_HPP_
#define ALPHAFIX_BOTTOM_UP_HPP_

#include "alphafix/four.hpp"
#include "alphafix/ground.hpp"
#include "alphafix/valuation.hpp"

namespace alphafix {

/// (Res_True, Res_False) at termination. Corresponds to fix_u(gp, alpha).
Interpretation bottom_up_alpha_fixed(const GroundProgram& gp, TruthValue alpha);

}  // namespace alphafix

#endif  // ALPHAFIX_BOTTOM_UP_HPP_
