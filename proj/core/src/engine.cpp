#include "alphafix/engine.hpp"

#include <utility>

namespace alphafix {

std::size_t iteration_bound(const GroundProgram& gp) { return 2 * gp.base().size() + 1; }

Valuation psi(const GroundProgram& gp, TruthValue alpha, const Valuation& v, const Valuation& w) {
  Valuation out = const_valuation(gp.base_ptr(), alpha);
  for (const GroundRule& r : gp.rules()) out.set(r.head, contrajoin_eval(v, w, r.body));
  return out;
}

namespace {

template <typename Step>
Valuation iterate_to_fixpoint(const GroundProgram& gp, Valuation start, Step step,
                              const char* what, std::size_t* counter) {
  const std::size_t bound = iteration_bound(gp);
  Valuation cur = std::move(start);
  for (std::size_t i = 0; i <= bound; ++i) {
    Valuation next = step(cur);
    if (counter) ++*counter;
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw InternalError(std::string(what) + " did not stabilise within " + std::to_string(bound) +
                      " steps");
}

}  // namespace

Valuation psi_prime(const GroundProgram& gp, TruthValue alpha, const Valuation& w,
                    IterationCounts* counts) {
  if (!w.same_base(const_valuation(gp.base_ptr(), alpha))) {
    throw BaseMismatch("valuation is not over the program's base");
  }
  return iterate_to_fixpoint(
      gp, const_valuation(gp.base_ptr(), alpha),
      [&](const Valuation& a) { return psi(gp, alpha, a, w); }, "inner iteration",
      counts ? &counts->inner : nullptr);
}

namespace {

Valuation outer_fixpoint(const GroundProgram& gp, TruthValue alpha, TruthValue start,
                         IterationCounts* counts) {
  return iterate_to_fixpoint(
      gp, const_valuation(gp.base_ptr(), start),
      [&](const Valuation& x) { return psi_prime(gp, alpha, x, counts); }, "outer iteration",
      counts ? &counts->outer : nullptr);
}

Valuation oscillation_fixpoint(const GroundProgram& gp, TruthValue alpha, TruthValue start,
                               IterationCounts* counts) {
  auto twice = [&](const Valuation& x) {
    Valuation y = psi_prime(gp, alpha, x, counts);
    if (counts) ++counts->outer;
    return psi_prime(gp, alpha, y, counts);
  };
  return iterate_to_fixpoint(gp, const_valuation(gp.base_ptr(), start), twice,
                             "oscillation iteration", counts ? &counts->outer : nullptr);
}

}  // namespace

Valuation fix_u(const GroundProgram& gp, TruthValue alpha, IterationCounts* counts) {
  return outer_fixpoint(gp, alpha, TruthValue::Unknown, counts);
}

Valuation fix_i(const GroundProgram& gp, TruthValue alpha, IterationCounts* counts) {
  return outer_fixpoint(gp, alpha, TruthValue::Inconsistent, counts);
}

OscillationPoints fix_f_t(const GroundProgram& gp, TruthValue alpha, IterationCounts* counts) {
  OscillationPoints out{oscillation_fixpoint(gp, alpha, TruthValue::False, counts),
                        oscillation_fixpoint(gp, alpha, TruthValue::True, counts)};
  if (!(psi_prime(gp, alpha, out.low) == out.high) ||
      !(psi_prime(gp, alpha, out.high) == out.low)) {
    throw InternalError("extreme oscillation points are not mapped onto each other");
  }
  return out;
}

SemanticsResult solve(const GroundProgram& gp, TruthValue alpha) {
  IterationCounts counts;
  Valuation u = fix_u(gp, alpha, &counts);
  Valuation i = fix_i(gp, alpha, &counts);
  OscillationPoints ft = fix_f_t(gp, alpha, &counts);
  SemanticsResult r{alpha,           std::move(u), std::move(i), std::move(ft.low),
                    std::move(ft.high), counts,    {}};
  auto check = [&](bool holds, const char* name) {
    if (!holds) r.violations.emplace_back(name);
  };
  check(r.fix_u == know_meet(r.fix_f, r.fix_t), "Fix_U = Fix_F (x) Fix_T");
  check(r.fix_i == know_join(r.fix_f, r.fix_t), "Fix_I = Fix_F (+) Fix_T");
  check(r.fix_f == truth_meet(r.fix_u, r.fix_i), "Fix_F = Fix_U & Fix_I");
  check(r.fix_t == truth_join(r.fix_u, r.fix_i), "Fix_T = Fix_U | Fix_I");
  check(leq_k(r.fix_u, r.fix_i), "Fix_U <=k Fix_I");
  check(leq_t(r.fix_f, r.fix_t), "Fix_F <=t Fix_T");
  return r;
}

bool is_alpha_fixed_model(const GroundProgram& gp, TruthValue alpha, const Valuation& v) {
  return psi_prime(gp, alpha, v) == v;
}

bool is_psi_fixpoint(const GroundProgram& gp, TruthValue alpha, const Valuation& v) {
  return psi(gp, alpha, v, v) == v;
}

bool satisfies_model_inequality(const GroundProgram& gp, const Valuation& v,
                                ModelOrientation orientation) {
  if (!v.same_base(const_valuation(gp.base_ptr(), TruthValue::Unknown))) {
    throw BaseMismatch("valuation is not over the program's base");
  }
  for (const GroundRule& r : gp.rules()) {
    const TruthValue head = v[r.head];
    const TruthValue body = eval(v, r.body);
    const bool ok = orientation == ModelOrientation::HeadBelowBody ? leq_t(head, body)
                                                                   : leq_t(body, head);
    if (!ok) return false;
  }
  return true;
}

ConsensusResult consensus_semantics(const GroundProgram& gp) {
  Valuation v = know_meet(fix_u(gp, TruthValue::False), fix_u(gp, TruthValue::True));
  ConsensusResult r{v, false, false, false};
  r.fixpoint_pessimistic = is_alpha_fixed_model(gp, TruthValue::False, v);
  r.fixpoint_optimistic = is_alpha_fixed_model(gp, TruthValue::True, v);
  r.model = satisfies_model_inequality(gp, v);
  r.value = std::move(v);
  return r;
}

const Valuation& ComparisonReport::fix_u(TruthValue alpha) const {
  switch (alpha) {
    case TruthValue::False: return by_alpha[0];
    case TruthValue::True: return by_alpha[1];
    case TruthValue::Unknown: return by_alpha[2];
    case TruthValue::Inconsistent: return by_alpha[3];
  }
  return by_alpha[2];
}

bool ComparisonReport::holds(const std::string& lhs, char order, const std::string& rhs) const {
  for (const Relation& r : relations)
    if (r.lhs == lhs && r.rhs == rhs && r.order == order) return true;
  return false;
}

ComparisonReport compare_semantics(const GroundProgram& gp) {
  ConsensusResult consensus = consensus_semantics(gp);
  ComparisonReport report{{fix_u(gp, TruthValue::False), fix_u(gp, TruthValue::True),
                           fix_u(gp, TruthValue::Unknown), fix_u(gp, TruthValue::Inconsistent)},
                          std::move(consensus),
                          {},
                          false,
                          false,
                          false};
  const std::pair<const char*, const Valuation*> named[] = {
      {"F", &report.by_alpha[0]},
      {"T", &report.by_alpha[1]},
      {"U", &report.by_alpha[2]},
      {"I", &report.by_alpha[3]},
      {"consensus", &report.consensus.value},
  };
  for (const auto& [ln, lv] : named) {
    for (const auto& [rn, rv] : named) {
      if (lv == rv) continue;
      if (leq_t(*lv, *rv)) report.relations.push_back({ln, rn, 't'});
      if (leq_k(*lv, *rv)) report.relations.push_back({ln, rn, 'k'});
    }
  }
  const Valuation& skeptical = report.by_alpha[2];
  report.skeptical_below_pessimistic = leq_k(skeptical, report.by_alpha[0]);
  report.skeptical_below_optimistic = leq_k(skeptical, report.by_alpha[1]);
  report.skeptical_below_consensus = leq_k(skeptical, report.consensus.value);
  return report;
}

}  // namespace alphafix
