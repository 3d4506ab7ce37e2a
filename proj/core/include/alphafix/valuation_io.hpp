// Text and JSON forms of valuations.
//
//   TSV:  one "atom<TAB>value" line per atom, sorted by atom
//   JSON: a flat object {"atom": "T", ...}
//
// Values are the single characters F, T, U, I.

#ifndef ALPHAFIX_VALUATION_IO_HPP_
#define ALPHAFIX_VALUATION_IO_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "alphafix/valuation.hpp"

namespace alphafix {

class ValuationFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string to_tsv(const Valuation& v);
std::string to_json(const Valuation& v);

// Reads a valuation covering exactly the atoms of `base`. Accepts the JSON
// form, or lines of "atom value" separated by a tab or spaces ('%' starts a
// comment). Throws ValuationFormatError naming the offending atom for unknown
// atoms, missing atoms, duplicates and bad value characters.
Valuation parse_valuation(std::string_view text, AtomTablePtr base);

}  // namespace alphafix

#endif  // ALPHAFIX_VALUATION_IO_HPP_
