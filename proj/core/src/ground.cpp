#include "alphafix/ground.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace alphafix {

std::string GroundAtom::to_string() const {
  std::string s = predicate;
  if (!args.empty()) {
    s += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) s += ',';
      s += args[i];
    }
    s += ')';
  }
  return s;
}

AtomTable::AtomTable(std::vector<GroundAtom> atoms) {
  std::vector<std::pair<std::string, GroundAtom>> keyed;
  keyed.reserve(atoms.size());
  for (auto& a : atoms) keyed.emplace_back(a.to_string(), std::move(a));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& x, const auto& y) { return x.first == y.first; }),
              keyed.end());
  for (auto& [name, atom] : keyed) {
    index_.emplace(name, static_cast<AtomId>(names_.size()));
    names_.push_back(std::move(name));
    atoms_.push_back(std::move(atom));
  }
}

std::optional<AtomId> AtomTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------

GroundFormula GroundFormula::constant(TruthValue v) {
  GroundFormula f;
  f.nodes_.push_back(GroundNode{GroundOp::Const, v, 0, 0, 0});
  return f;
}

GroundFormula GroundFormula::atom(AtomId id) {
  GroundFormula f;
  f.nodes_.push_back(GroundNode{GroundOp::Atom, TruthValue::Unknown, id, 0, 0});
  return f;
}

GroundFormula GroundFormula::neg_atom(AtomId id) {
  GroundFormula f;
  f.nodes_.push_back(GroundNode{GroundOp::NegAtom, TruthValue::Unknown, id, 0, 0});
  return f;
}

GroundFormula GroundFormula::binary(GroundOp op, const GroundFormula& lhs,
                                    const GroundFormula& rhs) {
  if (op == GroundOp::Atom || op == GroundOp::NegAtom || op == GroundOp::Const) {
    throw std::invalid_argument("not a binary ground operator");
  }
  GroundFormula f;
  f.nodes_ = lhs.nodes_;
  f.nodes_.reserve(lhs.nodes_.size() + rhs.nodes_.size() + 1);
  const auto offset = static_cast<std::uint32_t>(lhs.nodes_.size());
  for (GroundNode n : rhs.nodes_) {
    if (n.op != GroundOp::Atom && n.op != GroundOp::NegAtom && n.op != GroundOp::Const) {
      n.lhs += offset;
      n.rhs += offset;
    }
    f.nodes_.push_back(n);
  }
  f.nodes_.push_back(GroundNode{op, TruthValue::Unknown, 0, lhs.root(),
                                static_cast<std::uint32_t>(f.nodes_.size() - 1)});
  return f;
}

GroundFormula GroundFormula::remap(const std::vector<AtomId>& mapping) const {
  GroundFormula f = *this;
  for (auto& n : f.nodes_) {
    if (n.op == GroundOp::Atom || n.op == GroundOp::NegAtom) n.atom = mapping.at(n.atom);
  }
  return f;
}

bool operator==(const GroundFormula& a, const GroundFormula& b) {
  if (a.nodes_.size() != b.nodes_.size()) return false;
  for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
    const GroundNode& x = a.nodes_[i];
    const GroundNode& y = b.nodes_[i];
    if (x.op != y.op) return false;
    switch (x.op) {
      case GroundOp::Const:
        if (x.value != y.value) return false;
        break;
      case GroundOp::Atom:
      case GroundOp::NegAtom:
        if (x.atom != y.atom) return false;
        break;
      default:
        if (x.lhs != y.lhs || x.rhs != y.rhs) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

GroundProgram::GroundProgram(AtomTablePtr base, std::vector<GroundRule> rules)
    : base_(std::move(base)), rules_(std::move(rules)) {
  std::sort(rules_.begin(), rules_.end(),
            [](const GroundRule& a, const GroundRule& b) { return a.head < b.head; });
  rule_index_.assign(base_->size(), -1);
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const AtomId h = rules_[i].head;
    if (h >= base_->size()) throw std::invalid_argument("rule head outside the base");
    if (rule_index_[h] != -1) {
      throw std::invalid_argument("two ground rules for " + base_->name(h));
    }
    rule_index_[h] = static_cast<std::int32_t>(i);
    for (const auto& n : rules_[i].body.nodes()) {
      if ((n.op == GroundOp::Atom || n.op == GroundOp::NegAtom) && n.atom >= base_->size()) {
        throw std::invalid_argument("rule body mentions an atom outside the base");
      }
    }
  }
  for (AtomId id = 0; id < base_->size(); ++id) {
    if (rule_index_[id] == -1) not_heads_.push_back(id);
  }
}

const GroundRule* GroundProgram::rule_for(AtomId id) const {
  if (id >= rule_index_.size() || rule_index_[id] < 0) return nullptr;
  return &rules_[static_cast<std::size_t>(rule_index_[id])];
}

// ---------------------------------------------------------------------------

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

using Env = std::map<std::string, std::string>;

std::vector<std::string> domain_of(const Program& p, const GroundOptions& options) {
  std::set<std::string> d(p.constants.begin(), p.constants.end());
  d.insert(options.extra_constants.begin(), options.extra_constants.end());
  return {d.begin(), d.end()};
}

GroundOp ground_op(BinaryOp op) {
  switch (op) {
    case BinaryOp::And: return GroundOp::And;
    case BinaryOp::Or: return GroundOp::Or;
    case BinaryOp::Consensus: return GroundOp::Consensus;
    case BinaryOp::Gullibility: return GroundOp::Gullibility;
  }
  return GroundOp::And;
}

// Value of a formula with no atoms (only constants and operators).
TruthValue value_of_atom_free(const GroundFormula& f) {
  std::vector<TruthValue> v(f.nodes().size());
  for (std::size_t i = 0; i < f.nodes().size(); ++i) {
    const GroundNode& n = f.node(static_cast<std::uint32_t>(i));
    switch (n.op) {
      case GroundOp::Const: v[i] = n.value; break;
      case GroundOp::And: v[i] = truth_meet(v[n.lhs], v[n.rhs]); break;
      case GroundOp::Or: v[i] = truth_join(v[n.lhs], v[n.rhs]); break;
      case GroundOp::Consensus: v[i] = know_meet(v[n.lhs], v[n.rhs]); break;
      case GroundOp::Gullibility: v[i] = know_join(v[n.lhs], v[n.rhs]); break;
      case GroundOp::Atom:
      case GroundOp::NegAtom: throw std::logic_error("guard mentions an atom");
    }
  }
  return v.back();
}

class Instantiator {
 public:
  explicit Instantiator(std::vector<std::string> domain) : domain_(std::move(domain)) {}

  AtomId intern(GroundAtom atom) {
    std::string key = atom.to_string();
    auto [it, inserted] = ids_.emplace(std::move(key), static_cast<AtomId>(atoms_.size()));
    if (inserted) atoms_.push_back(std::move(atom));
    return it->second;
  }

  GroundAtom substitute(const Atom& a, const Env& env) const {
    GroundAtom g{a.predicate, {}};
    g.args.reserve(a.args.size());
    for (const auto& t : a.args) g.args.push_back(resolve(t, env));
    return g;
  }

  GroundFormula instantiate(const Formula& f, const Env& env) {
    return std::visit(
        Overloaded{
            [&](const Formula::AtomRef& x) {
              return GroundFormula::atom(intern(substitute(x.atom, env)));
            },
            [&](const Formula::NegAtom& x) {
              return GroundFormula::neg_atom(intern(substitute(x.atom, env)));
            },
            [&](const Formula::Const& c) { return GroundFormula::constant(c.value); },
            [&](const Formula::Equal& e) {
              return GroundFormula::constant(resolve(e.lhs, env) == resolve(e.rhs, env)
                                                 ? TruthValue::True
                                                 : TruthValue::False);
            },
            [&](const Formula::Binary& b) {
              return GroundFormula::binary(ground_op(b.op), instantiate(*b.lhs, env),
                                           instantiate(*b.rhs, env));
            },
            [&](const Formula::Quantified& q) {
              const bool exists = q.kind == Quantifier::Exists;
              if (domain_.empty()) {
                return GroundFormula::constant(exists ? TruthValue::False : TruthValue::True);
              }
              std::optional<GroundFormula> acc;
              Env inner = env;
              for (const auto& c : domain_) {
                inner[q.variable] = c;
                GroundFormula g = instantiate(*q.body, inner);
                acc = acc ? GroundFormula::binary(exists ? GroundOp::Or : GroundOp::And, *acc, g)
                          : std::move(g);
              }
              return *acc;
            },
            [&](const Formula::Guard& g) {
              return GroundFormula::constant(
                  negation(value_of_atom_free(instantiate(*g.operand, env))));
            },
        },
        f.node);
  }

  const std::vector<GroundAtom>& atoms() const { return atoms_; }
  const std::vector<std::string>& domain() const { return domain_; }

 private:
  static const std::string& resolve(const Term& t, const Env& env) {
    if (!t.is_variable()) return t.name;
    auto it = env.find(t.name);
    if (it == env.end()) throw std::invalid_argument("unbound variable " + t.name);
    return it->second;
  }

  std::vector<std::string> domain_;
  std::unordered_map<std::string, AtomId> ids_;
  std::vector<GroundAtom> atoms_;
};

// Calls fn(env) for every assignment of domain constants to `vars`.
template <typename Fn>
void for_each_assignment(const std::vector<std::string>& vars,
                         const std::vector<std::string>& domain, Fn&& fn) {
  if (vars.empty()) {
    fn(Env{});
    return;
  }
  if (domain.empty()) return;
  std::vector<std::size_t> pick(vars.size(), 0);
  for (;;) {
    Env env;
    for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = domain[pick[i]];
    fn(env);
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++pick[i] < domain.size()) break;
      pick[i] = 0;
      if (i == 0) return;
    }
  }
}

void collect_predicates(const Formula& f, std::map<std::string, std::size_t>& out) {
  std::visit(Overloaded{
                 [&](const Formula::AtomRef& x) { out.emplace(x.atom.predicate, x.atom.args.size()); },
                 [&](const Formula::NegAtom& x) { out.emplace(x.atom.predicate, x.atom.args.size()); },
                 [](const Formula::Const&) {},
                 [](const Formula::Equal&) {},
                 [&](const Formula::Binary& b) {
                   collect_predicates(*b.lhs, out);
                   collect_predicates(*b.rhs, out);
                 },
                 [&](const Formula::Quantified& q) { collect_predicates(*q.body, out); },
                 [](const Formula::Guard&) {},
             },
             f.node);
}

std::vector<GroundAtom> full_base(const Program& p, const std::vector<std::string>& domain) {
  std::map<std::string, std::size_t> predicates;
  for (const auto& c : p.clauses) {
    predicates.emplace(c.head.predicate, c.head.args.size());
    collect_predicates(*c.body, predicates);
  }
  std::vector<GroundAtom> out;
  for (const auto& [name, arity] : predicates) {
    std::vector<std::string> vars(arity);
    for (std::size_t i = 0; i < arity; ++i) vars[i] = "_" + std::to_string(i);
    for_each_assignment(vars, domain, [&](const Env& env) {
      GroundAtom g{name, {}};
      for (const auto& v : vars) g.args.push_back(env.at(v));
      out.push_back(std::move(g));
    });
  }
  return out;
}

}  // namespace

std::vector<GroundAtom> herbrand_base(const Program& p, const GroundOptions& options) {
  AtomTable table(full_base(p, domain_of(p, options)));
  std::vector<GroundAtom> out;
  for (AtomId i = 0; i < table.size(); ++i) out.push_back(table.atom(i));
  return out;
}

GroundProgram ground(const Program& p, const GroundOptions& options) {
  Instantiator inst(domain_of(p, options));

  // Bodies per (temporary) head id, in clause and instantiation order.
  std::map<AtomId, GroundRule> merged;
  std::vector<AtomId> head_order;
  for (const auto& clause : p.clauses) {
    std::vector<std::string> vars;
    for (const auto& t : clause.head.args) {
      if (t.is_variable() && std::find(vars.begin(), vars.end(), t.name) == vars.end()) {
        vars.push_back(t.name);
      }
    }
    for_each_assignment(vars, inst.domain(), [&](const Env& env) {
      const AtomId head = inst.intern(inst.substitute(clause.head, env));
      GroundFormula body = inst.instantiate(*clause.body, env);
      auto it = merged.find(head);
      if (it == merged.end()) {
        merged.emplace(head, GroundRule{head, std::move(body), 1});
      } else {
        it->second.body = GroundFormula::binary(GroundOp::Or, it->second.body, body);
        ++it->second.merged;
      }
    });
  }

  std::vector<GroundAtom> atoms = inst.atoms();
  if (options.base == BaseMode::Full) {
    auto full = full_base(p, inst.domain());
    atoms.insert(atoms.end(), full.begin(), full.end());
  }
  auto table = std::make_shared<const AtomTable>(std::move(atoms));

  std::vector<AtomId> mapping(inst.atoms().size());
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    mapping[i] = *table->find(inst.atoms()[i].to_string());
  }
  std::vector<GroundRule> rules;
  rules.reserve(merged.size());
  for (auto& [head, rule] : merged) {
    rules.push_back(GroundRule{mapping[head], rule.body.remap(mapping), rule.merged});
  }
  return GroundProgram(std::move(table), std::move(rules));
}

// ---------------------------------------------------------------------------

namespace {

Atom to_atom(const GroundAtom& g) {
  Atom a{g.predicate, {}};
  for (const auto& c : g.args) a.args.push_back(Term::constant(c));
  return a;
}

FormulaPtr to_formula(const GroundFormula& f, std::uint32_t i, const AtomTable& base) {
  const GroundNode& n = f.node(i);
  switch (n.op) {
    case GroundOp::Const: return make_const(n.value);
    case GroundOp::Atom: return make_atom(to_atom(base.atom(n.atom)));
    case GroundOp::NegAtom: return make_neg_atom(to_atom(base.atom(n.atom)));
    case GroundOp::And:
      return make_binary(BinaryOp::And, to_formula(f, n.lhs, base), to_formula(f, n.rhs, base));
    case GroundOp::Or:
      return make_binary(BinaryOp::Or, to_formula(f, n.lhs, base), to_formula(f, n.rhs, base));
    case GroundOp::Consensus:
      return make_binary(BinaryOp::Consensus, to_formula(f, n.lhs, base),
                         to_formula(f, n.rhs, base));
    case GroundOp::Gullibility:
      return make_binary(BinaryOp::Gullibility, to_formula(f, n.lhs, base),
                         to_formula(f, n.rhs, base));
  }
  return make_const(TruthValue::Unknown);
}

}  // namespace

std::string render_ground_formula(const GroundFormula& f, const AtomTable& base) {
  return render_formula(*to_formula(f, f.root(), base));
}

std::string render_ground_program(const GroundProgram& gp) {
  std::string out;
  for (const auto& rule : gp.rules()) {
    out += gp.base().name(rule.head);
    out += " <- ";
    out += render_ground_formula(rule.body, gp.base());
    out += ".\n";
  }
  return out;
}

}  // namespace alphafix
