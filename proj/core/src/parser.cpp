// Recursive-descent parser for the program syntax described in syntax.hpp.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "alphafix/syntax.hpp"

namespace alphafix {

namespace {

enum class Tok {
  LowerIdent,  // predicate or constant
  Variable,
  Truth,  // #t #f #u #i
  Arrow,  // <-
  Dot,
  Comma,
  LParen,
  RParen,
  Colon,
  Tilde,
  Equals,
  Amp,
  Bar,
  Star,
  Plus,
  Exists,
  Forall,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourcePos pos;
};

std::string describe(const Token& t) {
  return t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> tokenize() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      Token t;
      t.pos = pos_;
      if (at_end()) {
        t.kind = Tok::End;
        out.push_back(t);
        return out;
      }
      const char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        std::string word;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
          word += advance();
        }
        if (word == "exists") {
          t.kind = Tok::Exists;
        } else if (word == "forall") {
          t.kind = Tok::Forall;
        } else if (std::isupper(static_cast<unsigned char>(word[0])) || word[0] == '_') {
          t.kind = Tok::Variable;
        } else {
          t.kind = Tok::LowerIdent;
        }
        t.text = std::move(word);
      } else if (c == '#') {
        advance();
        if (at_end() || std::string_view("tfui").find(peek()) == std::string_view::npos) {
          throw ParseError(t.pos, "expected one of #t #f #u #i");
        }
        t.kind = Tok::Truth;
        t.text = std::string("#") + advance();
        if (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
          throw ParseError(t.pos, "expected one of #t #f #u #i");
        }
      } else if (c == '<') {
        advance();
        if (at_end() || peek() != '-') throw ParseError(t.pos, "expected '<-'");
        advance();
        t.kind = Tok::Arrow;
        t.text = "<-";
      } else {
        advance();
        t.text = std::string(1, c);
        switch (c) {
          case '.': t.kind = Tok::Dot; break;
          case ',': t.kind = Tok::Comma; break;
          case '(': t.kind = Tok::LParen; break;
          case ')': t.kind = Tok::RParen; break;
          case ':': t.kind = Tok::Colon; break;
          case '~': t.kind = Tok::Tilde; break;
          case '=': t.kind = Tok::Equals; break;
          case '&': t.kind = Tok::Amp; break;
          case '|': t.kind = Tok::Bar; break;
          case '*': t.kind = Tok::Star; break;
          case '+': t.kind = Tok::Plus; break;
          default: throw ParseError(t.pos, std::string("unexpected character '") + c + "'");
        }
      }
      out.push_back(std::move(t));
    }
  }

 private:
  bool at_end() const { return offset_ >= text_.size(); }
  char peek() const { return text_[offset_]; }
  char advance() {
    const char c = text_[offset_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    return c;
  }
  void skip_space_and_comments() {
    while (!at_end()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == '%') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t offset_ = 0;
  SourcePos pos_;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Program parse() {
    std::vector<Clause> clauses;
    while (peek().kind != Tok::End) clauses.push_back(clause());
    return make_program(std::move(clauses));
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(index_ + ahead, tokens_.size() - 1)];
  }
  const Token& advance() { return tokens_[index_ < tokens_.size() - 1 ? index_++ : index_]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    advance();
    return true;
  }
  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      throw ParseError(peek().pos, std::string("expected ") + what + ", found " + describe(peek()));
    }
    return advance();
  }

  Clause clause() {
    const SourcePos pos = peek().pos;
    head_vars_.clear();
    bound_.clear();
    Atom head = atom(/*in_head=*/true);
    FormulaPtr body;
    if (accept(Tok::Arrow)) {
      body = formula();
    } else {
      body = make_const(TruthValue::True);
    }
    expect(Tok::Dot, "'.'");
    return Clause{std::move(head), std::move(body), pos};
  }

  Atom atom(bool in_head) {
    const Token& name = expect(Tok::LowerIdent, "a predicate name");
    Atom a{name.text, {}};
    const SourcePos pos = name.pos;
    if (accept(Tok::LParen)) {
      do {
        a.args.push_back(term(in_head));
      } while (accept(Tok::Comma));
      expect(Tok::RParen, "')'");
    }
    check_arity(a, pos);
    return a;
  }

  Term term(bool in_head) {
    const Token& t = peek();
    if (t.kind == Tok::Variable) {
      advance();
      if (in_head) {
        head_vars_.insert(t.text);
      } else if (!head_vars_.count(t.text) &&
                 std::find(bound_.begin(), bound_.end(), t.text) == bound_.end()) {
        throw ParseError(t.pos, "variable " + t.text +
                                    " is free in the body but does not occur in the head");
      }
      return Term::variable(t.text);
    }
    if (t.kind == Tok::LowerIdent) {
      advance();
      return Term::constant(t.text);
    }
    throw ParseError(t.pos, "expected a term, found " + describe(t));
  }

  void check_arity(const Atom& a, SourcePos pos) {
    auto [it, inserted] = arity_.emplace(a.predicate, a.args.size());
    if (!inserted && it->second != a.args.size()) {
      throw ParseError(pos, "predicate " + a.predicate + " used with arity " +
                                std::to_string(a.args.size()) + " but earlier with arity " +
                                std::to_string(it->second));
    }
  }

  // Binary levels, loosest first.
  static std::optional<BinaryOp> binary_at(Tok kind, int level) {
    static constexpr Tok kTokens[] = {Tok::Plus, Tok::Star, Tok::Bar, Tok::Amp};
    static constexpr BinaryOp kOps[] = {BinaryOp::Gullibility, BinaryOp::Consensus, BinaryOp::Or,
                                        BinaryOp::And};
    if (kind == kTokens[level]) return kOps[level];
    return std::nullopt;
  }

  FormulaPtr formula(int level = 0) {
    if (level == 4) return unary();
    FormulaPtr lhs = formula(level + 1);
    while (auto op = binary_at(peek().kind, level)) {
      advance();
      FormulaPtr rhs = formula(level + 1);
      lhs = make_binary(*op, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  FormulaPtr unary() {
    const Token& t = peek();
    if (t.kind == Tok::Exists || t.kind == Tok::Forall) {
      advance();
      const Quantifier kind = t.kind == Tok::Exists ? Quantifier::Exists : Quantifier::Forall;
      const Token& var = expect(Tok::Variable, "a variable after the quantifier");
      expect(Tok::Colon, "':'");
      bound_.push_back(var.text);
      FormulaPtr body = formula();
      bound_.pop_back();
      return make_quantified(kind, var.text, std::move(body));
    }
    if (t.kind == Tok::Tilde) {
      const SourcePos pos = t.pos;
      advance();
      if (peek().kind == Tok::LowerIdent && peek(1).kind != Tok::Equals) {
        return make_neg_atom(atom(false));
      }
      FormulaPtr operand = primary();
      if (const auto* a = std::get_if<Formula::AtomRef>(&operand->node)) {
        return make_neg_atom(a->atom);
      }
      if (!is_atom_free(*operand)) {
        throw ParseError(pos, "negation applies only to atoms and to atom-free guards");
      }
      return make_guard(std::move(operand));
    }
    return primary();
  }

  FormulaPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::LParen: {
        advance();
        FormulaPtr f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Truth: {
        advance();
        return make_const(*truth_value_from_char(
            static_cast<char>(std::toupper(static_cast<unsigned char>(t.text[1])))));
      }
      case Tok::Variable: {
        Term lhs = term(false);
        expect(Tok::Equals, "'=' after a variable");
        Term rhs = term(false);
        return make_equal(std::move(lhs), std::move(rhs));
      }
      case Tok::LowerIdent: {
        if (peek(1).kind == Tok::Equals) {
          Term lhs = term(false);
          advance();
          Term rhs = term(false);
          return make_equal(std::move(lhs), std::move(rhs));
        }
        return make_atom(atom(false));
      }
      default:
        throw ParseError(t.pos, "expected a formula, found " + describe(t));
    }
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
  std::map<std::string, std::size_t> arity_;
  std::set<std::string> head_vars_;
  std::vector<std::string> bound_;
};

}  // namespace

Program parse_program(std::string_view text) {
  return Parser(Lexer(text).tokenize()).parse();
}

}  // namespace alphafix
