#include "alphafix/oracles.hpp"

#include <algorithm>
#include <string>

namespace alphafix {

namespace {

ThreeValue lnot(ThreeValue a) {
  return static_cast<ThreeValue>(2 - static_cast<int>(a));
}

ThreeValue from_four(TruthValue t) {
  switch (t) {
    case TruthValue::True: return ThreeValue::True;
    case TruthValue::False: return ThreeValue::False;
    case TruthValue::Unknown: return ThreeValue::Unknown;
    case TruthValue::Inconsistent: break;
  }
  throw std::invalid_argument("inconsistent value has no three-valued counterpart");
}

TruthValue to_four(ThreeValue t) {
  switch (t) {
    case ThreeValue::True: return TruthValue::True;
    case ThreeValue::False: return TruthValue::False;
    case ThreeValue::Unknown: break;
  }
  return TruthValue::Unknown;
}

// pos supplies positive atoms, neg supplies the atoms under negation.
ThreeValue eval3(const GroundFormula& f, std::uint32_t i, const ThreeValuation& pos,
                 const ThreeValuation& neg) {
  const GroundNode& n = f.node(i);
  switch (n.op) {
    case GroundOp::Const: return from_four(n.value);
    case GroundOp::Atom: return pos[n.atom];
    case GroundOp::NegAtom: return lnot(neg[n.atom]);
    case GroundOp::And: return std::min(eval3(f, n.lhs, pos, neg), eval3(f, n.rhs, pos, neg));
    case GroundOp::Or: return std::max(eval3(f, n.lhs, pos, neg), eval3(f, n.rhs, pos, neg));
    default: break;
  }
  throw NotConventional("knowledge connective in a conventional body");
}

void require_conventional(const GroundProgram& gp) {
  if (!is_conventional_ground(gp)) throw NotConventional("program is not conventional");
}

void require_size(const GroundProgram& gp, const ThreeValuation& v) {
  if (v.size() != gp.base().size()) throw BaseMismatch("three-valuation size does not match base");
}

template <typename Step>
ThreeValuation iterate(const GroundProgram& gp, ThreeValuation cur, Step step) {
  const std::size_t bound = 2 * gp.base().size() + 1;
  for (std::size_t k = 0; k <= bound; ++k) {
    ThreeValuation next = step(cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw std::logic_error("oracle iteration did not stabilise");
}

}  // namespace

bool is_conventional_ground(const GroundProgram& gp) {
  for (const GroundRule& r : gp.rules()) {
    for (const GroundNode& n : r.body.nodes()) {
      if (n.op == GroundOp::Consensus || n.op == GroundOp::Gullibility) return false;
      if (n.op == GroundOp::Const && n.value != TruthValue::True && n.value != TruthValue::False)
        return false;
    }
  }
  return true;
}

Valuation to_valuation(const GroundProgram& gp, const ThreeValuation& v) {
  require_size(gp, v);
  std::vector<TruthValue> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), to_four);
  return Valuation(gp.base_ptr(), std::move(out));
}

ThreeValuation to_three_valuation(const Valuation& v) {
  ThreeValuation out(v.size());
  for (AtomId i = 0; i < v.size(); ++i) out[i] = from_four(v[i]);
  return out;
}

ThreeValuation gl_transform(const GroundProgram& gp, const ThreeValuation& v) {
  require_conventional(gp);
  require_size(gp, v);
  // Negative literals are frozen at their value in v; the remaining positive
  // program is iterated upward from all-false.
  return iterate(gp, ThreeValuation(v.size(), ThreeValue::False), [&](const ThreeValuation& w) {
    ThreeValuation next(w.size(), ThreeValue::False);
    for (const GroundRule& r : gp.rules()) next[r.head] = eval3(r.body, r.body.root(), w, v);
    return next;
  });
}

ThreeValuation well_founded(const GroundProgram& gp) {
  require_conventional(gp);
  return iterate(gp, ThreeValuation(gp.base().size(), ThreeValue::Unknown),
                 [&](const ThreeValuation& v) { return gl_transform(gp, v); });
}

ThreeValuation kripke_kleene(const GroundProgram& gp) {
  require_conventional(gp);
  return iterate(gp, ThreeValuation(gp.base().size(), ThreeValue::Unknown),
                 [&](const ThreeValuation& v) {
                   ThreeValuation next(v.size(), ThreeValue::Unknown);
                   for (const GroundRule& r : gp.rules())
                     next[r.head] = eval3(r.body, r.body.root(), v, v);
                   return next;
                 });
}

std::vector<ThreeValuation> enumerate_stable_models(const GroundProgram& gp,
                                                    std::size_t max_atoms) {
  require_conventional(gp);
  const std::size_t n = gp.base().size();
  if (n > max_atoms) {
    throw EnumerationCapExceeded("base has " + std::to_string(n) + " atoms; enumeration cap is " +
                                 std::to_string(max_atoms));
  }
  std::vector<ThreeValuation> models;
  ThreeValuation v(n, ThreeValue::False);
  while (true) {
    if (gl_transform(gp, v) == v) models.push_back(v);
    std::size_t i = n;
    while (i > 0 && v[i - 1] == ThreeValue::True) v[--i] = ThreeValue::False;
    if (i == 0) break;
    v[i - 1] = static_cast<ThreeValue>(static_cast<int>(v[i - 1]) + 1);
  }
  return models;
}

}  // namespace alphafix
