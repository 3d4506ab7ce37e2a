#include "alphafix/syntax.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace alphafix {

ParseError::ParseError(SourcePos pos, const std::string& message)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " +
                         message),
      pos_(pos),
      detail_(message) {}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool same(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

FormulaPtr wrap(Formula::Const c) { return std::make_shared<const Formula>(Formula{c}); }

}  // namespace

bool operator==(const Formula& a, const Formula& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      Overloaded{
          [&](const Formula::AtomRef& x) { return x.atom == std::get<Formula::AtomRef>(b.node).atom; },
          [&](const Formula::NegAtom& x) { return x.atom == std::get<Formula::NegAtom>(b.node).atom; },
          [&](const Formula::Const& x) { return x.value == std::get<Formula::Const>(b.node).value; },
          [&](const Formula::Equal& x) {
            const auto& y = std::get<Formula::Equal>(b.node);
            return x.lhs == y.lhs && x.rhs == y.rhs;
          },
          [&](const Formula::Binary& x) {
            const auto& y = std::get<Formula::Binary>(b.node);
            return x.op == y.op && same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
          },
          [&](const Formula::Quantified& x) {
            const auto& y = std::get<Formula::Quantified>(b.node);
            return x.kind == y.kind && x.variable == y.variable && same(x.body, y.body);
          },
          [&](const Formula::Guard& x) {
            return same(x.operand, std::get<Formula::Guard>(b.node).operand);
          },
      },
      a.node);
}

bool operator==(const Clause& a, const Clause& b) {
  return a.head == b.head && same(a.body, b.body);
}

FormulaPtr make_atom(Atom atom) {
  return std::make_shared<const Formula>(Formula{Formula::AtomRef{std::move(atom)}});
}
FormulaPtr make_neg_atom(Atom atom) {
  return std::make_shared<const Formula>(Formula{Formula::NegAtom{std::move(atom)}});
}
FormulaPtr make_const(TruthValue v) { return wrap(Formula::Const{v}); }
FormulaPtr make_equal(Term lhs, Term rhs) {
  return std::make_shared<const Formula>(Formula{Formula::Equal{std::move(lhs), std::move(rhs)}});
}
FormulaPtr make_binary(BinaryOp op, FormulaPtr lhs, FormulaPtr rhs) {
  return std::make_shared<const Formula>(
      Formula{Formula::Binary{op, std::move(lhs), std::move(rhs)}});
}
FormulaPtr make_quantified(Quantifier kind, std::string variable, FormulaPtr body) {
  return std::make_shared<const Formula>(
      Formula{Formula::Quantified{kind, std::move(variable), std::move(body)}});
}
FormulaPtr make_guard(FormulaPtr operand) {
  if (!is_atom_free(*operand)) {
    throw std::invalid_argument("negation of a compound formula must not mention atoms");
  }
  return std::make_shared<const Formula>(Formula{Formula::Guard{std::move(operand)}});
}

bool is_atom_free(const Formula& f) {
  return std::visit(Overloaded{
                        [](const Formula::AtomRef&) { return false; },
                        [](const Formula::NegAtom&) { return false; },
                        [](const Formula::Const&) { return true; },
                        [](const Formula::Equal&) { return true; },
                        [](const Formula::Binary& b) {
                          return is_atom_free(*b.lhs) && is_atom_free(*b.rhs);
                        },
                        [](const Formula::Quantified& q) { return is_atom_free(*q.body); },
                        [](const Formula::Guard&) { return true; },
                    },
                    f.node);
}

namespace {

void collect_constants(const Atom& a, std::set<std::string>& out) {
  for (const auto& t : a.args)
    if (!t.is_variable()) out.insert(t.name);
}

void collect_constants(const Formula& f, std::set<std::string>& out) {
  std::visit(Overloaded{
                 [&](const Formula::AtomRef& x) { collect_constants(x.atom, out); },
                 [&](const Formula::NegAtom& x) { collect_constants(x.atom, out); },
                 [](const Formula::Const&) {},
                 [&](const Formula::Equal& e) {
                   if (!e.lhs.is_variable()) out.insert(e.lhs.name);
                   if (!e.rhs.is_variable()) out.insert(e.rhs.name);
                 },
                 [&](const Formula::Binary& b) {
                   collect_constants(*b.lhs, out);
                   collect_constants(*b.rhs, out);
                 },
                 [&](const Formula::Quantified& q) { collect_constants(*q.body, out); },
                 [&](const Formula::Guard& g) { collect_constants(*g.operand, out); },
             },
             f.node);
}

}  // namespace

Program make_program(std::vector<Clause> clauses) {
  std::set<std::string> constants;
  for (const auto& c : clauses) {
    collect_constants(c.head, constants);
    collect_constants(*c.body, constants);
  }
  return Program{std::move(clauses), {constants.begin(), constants.end()}};
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

int precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::Gullibility: return 0;
    case BinaryOp::Consensus: return 1;
    case BinaryOp::Or: return 2;
    case BinaryOp::And: return 3;
  }
  return 0;
}

const char* symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::And: return "&";
    case BinaryOp::Or: return "|";
    case BinaryOp::Consensus: return "*";
    case BinaryOp::Gullibility: return "+";
  }
  return "?";
}

const char* truth_token(TruthValue v) {
  switch (v) {
    case TruthValue::True: return "#t";
    case TruthValue::False: return "#f";
    case TruthValue::Unknown: return "#u";
    case TruthValue::Inconsistent: return "#i";
  }
  return "#?";
}

void render(const Formula& f, std::ostream& out);

// Operands of a binary node get parentheses when they bind looser than the
// parent, sit on the right at equal precedence (operators are
// left-associative), or are quantifiers (whose bodies extend rightwards).
void render_operand(const Formula& child, int parent_prec, bool right, std::ostream& out) {
  bool parens = std::holds_alternative<Formula::Quantified>(child.node);
  if (const auto* b = std::get_if<Formula::Binary>(&child.node)) {
    const int p = precedence(b->op);
    parens = p < parent_prec || (right && p == parent_prec);
  }
  if (parens) out << '(';
  render(child, out);
  if (parens) out << ')';
}

void render(const Formula& f, std::ostream& out) {
  std::visit(Overloaded{
                 [&](const Formula::AtomRef& x) { out << render_atom(x.atom); },
                 [&](const Formula::NegAtom& x) { out << '~' << render_atom(x.atom); },
                 [&](const Formula::Const& c) { out << truth_token(c.value); },
                 [&](const Formula::Equal& e) { out << e.lhs.name << " = " << e.rhs.name; },
                 [&](const Formula::Binary& b) {
                   const int p = precedence(b.op);
                   render_operand(*b.lhs, p, false, out);
                   out << ' ' << symbol(b.op) << ' ';
                   render_operand(*b.rhs, p, true, out);
                 },
                 [&](const Formula::Quantified& q) {
                   out << (q.kind == Quantifier::Exists ? "exists " : "forall ") << q.variable
                       << ": (";
                   render(*q.body, out);
                   out << ')';
                 },
                 [&](const Formula::Guard& g) {
                   out << "~(";
                   render(*g.operand, out);
                   out << ')';
                 },
             },
             f.node);
}

}  // namespace

std::string render_atom(const Atom& a) {
  std::string s = a.predicate;
  if (!a.args.empty()) {
    s += '(';
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      if (i) s += ',';
      s += a.args[i].name;
    }
    s += ')';
  }
  return s;
}

std::string render_formula(const Formula& f) {
  std::ostringstream out;
  render(f, out);
  return out.str();
}

std::string render_clause(const Clause& c) {
  return render_atom(c.head) + " <- " + render_formula(*c.body) + ".";
}

std::string render_program(const Program& p) {
  std::string s;
  for (const auto& c : p.clauses) {
    s += render_clause(c);
    s += '\n';
  }
  return s;
}

// ---------------------------------------------------------------------------
// Classification

namespace {

bool conventional(const Formula& f) {
  return std::visit(Overloaded{
                        [](const Formula::AtomRef&) { return true; },
                        [](const Formula::NegAtom&) { return true; },
                        [](const Formula::Const& c) {
                          return c.value == TruthValue::True || c.value == TruthValue::False;
                        },
                        [](const Formula::Equal&) { return true; },
                        [](const Formula::Binary& b) {
                          return (b.op == BinaryOp::And || b.op == BinaryOp::Or) &&
                                 conventional(*b.lhs) && conventional(*b.rhs);
                        },
                        [](const Formula::Quantified& q) {
                          return q.kind == Quantifier::Exists && conventional(*q.body);
                        },
                        [](const Formula::Guard& g) { return conventional(*g.operand); },
                    },
                    f.node);
}

bool conjunction_of_literals(const Formula& f) {
  if (std::holds_alternative<Formula::AtomRef>(f.node) ||
      std::holds_alternative<Formula::NegAtom>(f.node)) {
    return true;
  }
  const auto* b = std::get_if<Formula::Binary>(&f.node);
  return b && b->op == BinaryOp::And && conjunction_of_literals(*b->lhs) &&
         conjunction_of_literals(*b->rhs);
}

bool is_fact_body(const Formula& f) {
  const auto* c = std::get_if<Formula::Const>(&f.node);
  return c && c->value == TruthValue::True;
}

}  // namespace

bool is_conventional(const Program& p, bool strict) {
  return std::all_of(p.clauses.begin(), p.clauses.end(), [&](const Clause& c) {
    if (!conventional(*c.body)) return false;
    return !strict || is_fact_body(*c.body) || conjunction_of_literals(*c.body);
  });
}

}  // namespace alphafix
