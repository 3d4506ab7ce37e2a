// Abstract syntax of Fitting programs over FOUR and its concrete text form.
//
// Concrete grammar (loosest to tightest binary operator: + * | &):
//
//   program  := { clause }
//   clause   := atom [ "<-" formula ] "."
//   formula  := formula ("+" | "*" | "|" | "&") formula
//             | ("exists" | "forall") VAR ":" formula
//             | "~" atom | "~" "(" guard ")"
//             | "#t" | "#f" | "#u" | "#i"
//             | term "=" term
//             | atom | "(" formula ")"
//   atom     := IDENT_LOWER [ "(" term { "," term } ")" ]
//
// "+" is gullibility (⊕), "*" consensus (⊗), "|" disjunction, "&"
// conjunction. Comments run from "%" to end of line. A clause without a body
// is a fact and gets the body #t.
//
// Negation applies to atoms. The only other negated form accepted is a guard:
// a parenthesized formula built from equalities and truth constants, which
// the grounder resolves to a constant.

#ifndef ALPHAFIX_SYNTAX_HPP_
#define ALPHAFIX_SYNTAX_HPP_

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "alphafix/four.hpp"

namespace alphafix {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Raised for syntax errors, predicate arity clashes and free body variables.
class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, const std::string& message);

  SourcePos pos() const { return pos_; }
  const std::string& detail() const { return detail_; }

 private:
  SourcePos pos_;
  std::string detail_;
};

struct Term {
  enum class Kind { Variable, Constant };

  Kind kind = Kind::Constant;
  std::string name;

  static Term variable(std::string name) { return {Kind::Variable, std::move(name)}; }
  static Term constant(std::string name) { return {Kind::Constant, std::move(name)}; }
  bool is_variable() const { return kind == Kind::Variable; }

  friend bool operator==(const Term&, const Term&) = default;
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  friend bool operator==(const Atom&, const Atom&) = default;
};

enum class BinaryOp { And, Or, Consensus, Gullibility };
enum class Quantifier { Exists, Forall };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  struct AtomRef {
    Atom atom;
  };
  struct NegAtom {
    Atom atom;
  };
  struct Const {
    TruthValue value;
  };
  struct Equal {
    Term lhs;
    Term rhs;
  };
  struct Binary {
    BinaryOp op;
    FormulaPtr lhs;
    FormulaPtr rhs;
  };
  struct Quantified {
    Quantifier kind;
    std::string variable;
    FormulaPtr body;
  };
  // Negation of an atom-free formula (equalities and truth constants only).
  struct Guard {
    FormulaPtr operand;
  };

  std::variant<AtomRef, NegAtom, Const, Equal, Binary, Quantified, Guard> node;
};

// Structural (AST) equality.
bool operator==(const Formula& a, const Formula& b);

FormulaPtr make_atom(Atom atom);
FormulaPtr make_neg_atom(Atom atom);
FormulaPtr make_const(TruthValue v);
FormulaPtr make_equal(Term lhs, Term rhs);
FormulaPtr make_binary(BinaryOp op, FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr make_quantified(Quantifier kind, std::string variable, FormulaPtr body);
// Throws std::invalid_argument if the operand mentions an atom.
FormulaPtr make_guard(FormulaPtr operand);

/// True iff no atom or negated atom occurs in `f`.
bool is_atom_free(const Formula& f);

struct Clause {
  Atom head;
  FormulaPtr body;
  SourcePos pos;
};

bool operator==(const Clause& a, const Clause& b);  // ignores positions

struct Program {
  std::vector<Clause> clauses;
  std::vector<std::string> constants;  // sorted, unique

  friend bool operator==(const Program& a, const Program& b) {
    return a.clauses == b.clauses && a.constants == b.constants;
  }
};

Program parse_program(std::string_view text);

/// Builds a Program from clauses, collecting its constants.
Program make_program(std::vector<Clause> clauses);

// Text that parse_program maps back to an AST-equal program.
std::string render_program(const Program& p);
std::string render_clause(const Clause& c);
std::string render_formula(const Formula& f);
std::string render_atom(const Atom& a);

/// A conventional program avoids ⊗, ⊕, ∀, #u and #i. In strict mode every
/// body must additionally be a conjunction of literals (or the fact body #t).
bool is_conventional(const Program& p, bool strict = false);

}  // namespace alphafix

#endif  // ALPHAFIX_SYNTAX_HPP_
