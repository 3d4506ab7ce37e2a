#include "alphafix/valuation.hpp"

#include <algorithm>

namespace alphafix {

Valuation::Valuation(AtomTablePtr base, TruthValue fill)
    : base_(std::move(base)), values_(base_->size(), fill) {}

Valuation::Valuation(AtomTablePtr base, std::vector<TruthValue> values)
    : base_(std::move(base)), values_(std::move(values)) {
  if (values_.size() != base_->size()) {
    throw BaseMismatch("valuation has " + std::to_string(values_.size()) +
                       " values for a base of " + std::to_string(base_->size()) + " atoms");
  }
}

TruthValue Valuation::at(std::string_view atom) const {
  auto id = base_->find(atom);
  if (!id) throw BaseMismatch("atom " + std::string(atom) + " is not in the base");
  return values_[*id];
}

bool Valuation::same_base(const Valuation& other) const {
  return base_ == other.base_ || *base_ == *other.base_;
}

namespace {

void require_same_base(const Valuation& v, const Valuation& w) {
  if (!v.same_base(w)) throw BaseMismatch("valuations are over different bases");
}

template <typename Op>
Valuation pointwise(const Valuation& v, const Valuation& w, Op op) {
  require_same_base(v, w);
  std::vector<TruthValue> out(v.size());
  for (AtomId i = 0; i < v.size(); ++i) out[i] = op(v[i], w[i]);
  return Valuation(v.base_ptr(), std::move(out));
}

template <typename Op>
Valuation pointwise(const Valuation& v, Op op) {
  std::vector<TruthValue> out(v.size());
  for (AtomId i = 0; i < v.size(); ++i) out[i] = op(v[i]);
  return Valuation(v.base_ptr(), std::move(out));
}

}  // namespace

bool operator==(const Valuation& a, const Valuation& b) {
  require_same_base(a, b);
  return a.values_ == b.values_;
}

Valuation const_valuation(AtomTablePtr base, TruthValue alpha) {
  return Valuation(std::move(base), alpha);
}

bool leq_t(const Valuation& v, const Valuation& w) {
  require_same_base(v, w);
  for (AtomId i = 0; i < v.size(); ++i)
    if (!leq_t(v[i], w[i])) return false;
  return true;
}

bool leq_k(const Valuation& v, const Valuation& w) {
  require_same_base(v, w);
  for (AtomId i = 0; i < v.size(); ++i)
    if (!leq_k(v[i], w[i])) return false;
  return true;
}

Valuation truth_meet(const Valuation& v, const Valuation& w) {
  return pointwise(v, w, [](TruthValue a, TruthValue b) { return truth_meet(a, b); });
}
Valuation truth_join(const Valuation& v, const Valuation& w) {
  return pointwise(v, w, [](TruthValue a, TruthValue b) { return truth_join(a, b); });
}
Valuation know_meet(const Valuation& v, const Valuation& w) {
  return pointwise(v, w, [](TruthValue a, TruthValue b) { return know_meet(a, b); });
}
Valuation know_join(const Valuation& v, const Valuation& w) {
  return pointwise(v, w, [](TruthValue a, TruthValue b) { return know_join(a, b); });
}
Valuation negation(const Valuation& v) {
  return pointwise(v, [](TruthValue a) { return negation(a); });
}
Valuation conflation(const Valuation& v) {
  return pointwise(v, [](TruthValue a) { return conflation(a); });
}

TruthValue contrajoin_eval(const Valuation& v, const Valuation& w, const GroundFormula& body) {
  require_same_base(v, w);
  const auto& nodes = body.nodes();
  // Post-order storage: one forward pass suffices. Small bodies stay on the
  // stack.
  constexpr std::size_t kInline = 64;
  TruthValue inline_buf[kInline];
  std::vector<TruthValue> heap_buf;
  TruthValue* val = inline_buf;
  if (nodes.size() > kInline) {
    heap_buf.resize(nodes.size());
    val = heap_buf.data();
  }
  const std::size_t n_atoms = v.size();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const GroundNode& n = nodes[i];
    switch (n.op) {
      case GroundOp::Const: val[i] = n.value; break;
      case GroundOp::Atom:
        if (n.atom >= n_atoms) throw BaseMismatch("body atom outside the base");
        val[i] = v[n.atom];
        break;
      case GroundOp::NegAtom:
        if (n.atom >= n_atoms) throw BaseMismatch("body atom outside the base");
        val[i] = negation(w[n.atom]);
        break;
      case GroundOp::And: val[i] = truth_meet(val[n.lhs], val[n.rhs]); break;
      case GroundOp::Or: val[i] = truth_join(val[n.lhs], val[n.rhs]); break;
      case GroundOp::Consensus: val[i] = know_meet(val[n.lhs], val[n.rhs]); break;
      case GroundOp::Gullibility: val[i] = know_join(val[n.lhs], val[n.rhs]); break;
    }
  }
  return val[nodes.size() - 1];
}

TruthValue value_in(const Interpretation& i, AtomId atom) {
  const bool t = i.true_set.count(atom) != 0;
  const bool f = i.false_set.count(atom) != 0;
  if (t && f) return TruthValue::Inconsistent;
  if (t) return TruthValue::True;
  if (f) return TruthValue::False;
  return TruthValue::Unknown;
}

Interpretation to_interpretation(const Valuation& v) {
  Interpretation out;
  for (AtomId i = 0; i < v.size(); ++i) {
    const TruthValue x = v[i];
    if (x == TruthValue::True || x == TruthValue::Inconsistent) out.true_set.insert(i);
    if (x == TruthValue::False || x == TruthValue::Inconsistent) out.false_set.insert(i);
  }
  return out;
}

Valuation from_interpretation(AtomTablePtr base, const Interpretation& i) {
  const std::size_t n = base->size();
  auto outside = [n](AtomId a) { return a >= n; };
  if (std::any_of(i.true_set.begin(), i.true_set.end(), outside) ||
      std::any_of(i.false_set.begin(), i.false_set.end(), outside)) {
    throw BaseMismatch("interpretation mentions an atom outside the base");
  }
  std::vector<TruthValue> values(n);
  for (AtomId a = 0; a < n; ++a) values[a] = value_in(i, a);
  return Valuation(std::move(base), std::move(values));
}

namespace {

TruthValue pseudo_eval_node(const PseudoInterpretation& j, const GroundFormula& body,
                            std::uint32_t index, std::size_t base_size) {
  const GroundNode& n = body.node(index);
  switch (n.op) {
    case GroundOp::Const: return n.value;
    case GroundOp::Atom:
      if (n.atom >= base_size) throw BaseMismatch("body atom outside the base");
      return value_in(j.pos, n.atom);
    case GroundOp::NegAtom:
      if (n.atom >= base_size) throw BaseMismatch("body atom outside the base");
      return negation(value_in(j.neg, n.atom));
    default: break;
  }
  const TruthValue l = pseudo_eval_node(j, body, n.lhs, base_size);
  const TruthValue r = pseudo_eval_node(j, body, n.rhs, base_size);
  switch (n.op) {
    case GroundOp::And: return truth_meet(l, r);
    case GroundOp::Or: return truth_join(l, r);
    case GroundOp::Consensus: return know_meet(l, r);
    case GroundOp::Gullibility: return know_join(l, r);
    default: return TruthValue::Unknown;
  }
}

}  // namespace

TruthValue pseudo_eval(const PseudoInterpretation& j, const GroundFormula& body,
                       std::size_t base_size) {
  return pseudo_eval_node(j, body, body.root(), base_size);
}

}  // namespace alphafix
