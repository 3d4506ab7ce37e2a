// Prints one PASS/FAIL line per acceptance criterion. All comparisons are on
// discrete truth values, so the tolerance is exact equality.

#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "alphafix/bottom_up.hpp"
#include "alphafix/engine.hpp"
#include "alphafix/lattice.hpp"
#include "alphafix/oracles.hpp"
#include "alphafix/syntax.hpp"
#include "brute_force.hpp"
#include "generators.hpp"

namespace {

using namespace alphafix;
using namespace alphafix::values;
namespace brute = alphafix::testing::brute;
using testing::ProgramKind;

constexpr std::size_t kIdentityPrograms = 600;
constexpr std::size_t kConventionalPrograms = 250;
constexpr std::size_t kCensusPrograms = 120;
constexpr std::size_t kCensusMaxAtoms = 4;
constexpr std::size_t kGeneralPrograms = 300;

GroundProgram data_program(const std::string& name, GroundOptions options = {}) {
  std::ifstream in(std::string(ALPHAFIX_TEST_DATA) + "/" + name);
  std::stringstream s;
  s << in.rdbuf();
  return ground(parse_program(s.str()), options);
}

// Collects the first mismatch so a failing line can say what went wrong.
struct Check {
  std::string first_failure;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && first_failure.empty()) first_failure = what;
  }
  bool passed() const { return first_failure.empty(); }
};

using Expected = std::map<std::string, TruthValue>;

void expect_values(Check& c, const Valuation& v, const Expected& expected, const std::string& tag) {
  for (const auto& [atom, value] : expected)
    c.expect(v.at(atom) == value, tag + " " + atom + " expected " + to_char(value) + " got " +
                                      to_char(v.at(atom)));
}

// Every program the property criteria quantify over.
std::vector<GroundProgram> generated_programs() {
  std::vector<GroundProgram> out;
  for (ProgramKind kind : {ProgramKind::AllConnectives, ProgramKind::Conventional,
                           ProgramKind::NegationFree, ProgramKind::PositiveConventional}) {
    auto batch = testing::program_corpus({kind, 6, 3}, kGeneralPrograms,
                                         1000 + static_cast<std::uint32_t>(kind));
    for (auto& gp : batch) out.push_back(std::move(gp));
  }
  return out;
}

const std::vector<GroundProgram>& corpus() {
  static const std::vector<GroundProgram> programs = generated_programs();
  return programs;
}

std::vector<GroundProgram> example_programs() {
  std::vector<GroundProgram> out;
  for (const char* name : {"suspect.blp", "worked_example.blp", "bornotb.blp", "colleague_raw.blp",
                           "colleague_normalized.blp", "even_loop.blp", "empty.blp"})
    out.push_back(data_program(name));
  return out;
}

Check suspect_table() {
  Check c;
  const GroundProgram gp = data_program("suspect.blp");
  const std::map<TruthValue, Expected> rows = {
      {F, {{"suspect(john)", T}, {"innocent(john)", F}, {"free(john)", F}, {"charge(john)", T}}},
      {T, {{"suspect(john)", T}, {"innocent(john)", T}, {"free(john)", T}, {"charge(john)", F}}},
      {U, {{"suspect(john)", T}, {"innocent(john)", U}, {"free(john)", U}, {"charge(john)", U}}},
      {I, {{"suspect(john)", T}, {"innocent(john)", I}, {"free(john)", I}, {"charge(john)", I}}},
  };
  for (const auto& [alpha, row] : rows)
    expect_values(c, fix_u(gp, alpha), row, std::string("alpha ") + to_char(alpha));
  c.expect(gp.base().size() == 4, "base has four atoms");
  return c;
}

Check worked_example() {
  Check c;
  const GroundProgram gp = data_program("worked_example.blp");
  expect_values(c, psi_prime(gp, F, const_valuation(gp.base_ptr(), U)),
                {{"a", F}, {"b", T}, {"c", F}, {"d", T}, {"e", U}}, "psi_prime");
  return c;
}

Check excluded_middle_table() {
  Check c;
  const GroundProgram gp = data_program("bornotb.blp");
  expect_values(c, fix_u(gp, F), {{"a", T}, {"b", F}}, "alpha F");
  expect_values(c, fix_u(gp, T), {{"a", T}, {"b", T}}, "alpha T");
  expect_values(c, fix_u(gp, U), {{"a", U}, {"b", U}}, "alpha U");
  expect_values(c, consensus_semantics(gp).value, {{"a", T}, {"b", U}}, "consensus");
  return c;
}

// Iterates the brute-force inner fixpoint from all-U until it stabilises.
brute::Values brute_fix_u(const GroundProgram& gp, TruthValue alpha) {
  brute::Values x(gp.base().size(), U);
  for (;;) {
    brute::Values next = brute::psi_prime(gp, alpha, x);
    if (next == x) return x;
    x = std::move(next);
  }
}

Check colleague_table() {
  Check c;
  GroundOptions options;
  options.extra_constants = {"a", "b", "c"};
  const GroundProgram gp = data_program("colleague_normalized.blp", options);
  const ComparisonReport report = compare_semantics(gp);
  for (TruthValue alpha : {F, T, U, I}) {
    expect_values(c, report.fix_u(alpha),
                  {{"colleague(a,b)", T},
                   {"colleague(b,a)", T},
                   {"colleague(a,c)", F},
                   {"colleague(c,a)", F},
                   {"colleague(b,c)", alpha},
                   {"colleague(c,b)", alpha}},
                  std::string("normalized alpha ") + to_char(alpha));
  }

  const GroundProgram raw = data_program("colleague_raw.blp");
  for (TruthValue alpha : {F, T, U, I}) {
    const Valuation v = fix_u(raw, alpha);
    const std::string tag = std::string("raw alpha ") + to_char(alpha);
    c.expect(v.values() == brute_fix_u(raw, alpha), tag + " differs from brute force");
    expect_values(c, v,
                  {{"colleague(a,b)", T},
                   {"colleague(b,a)", T},
                   {"colleague(a,c)", alpha},
                   {"colleague(c,a)", alpha}},
                  tag);
  }
  return c;
}

Check fixpoint_identities() {
  Check c;
  const auto programs = testing::program_corpus({ProgramKind::AllConnectives, 6, 3},
                                                kIdentityPrograms, 2024);
  for (const GroundProgram& gp : programs) {
    for (TruthValue alpha : kAllTruthValues) {
      const SemanticsResult r = solve(gp, alpha);
      const std::string tag = render_ground_program(gp) + " alpha " + to_char(alpha);
      c.expect(r.fix_u == know_meet(r.fix_f, r.fix_t), "Fix_U identity: " + tag);
      c.expect(r.fix_i == know_join(r.fix_f, r.fix_t), "Fix_I identity: " + tag);
      c.expect(r.fix_f == truth_meet(r.fix_u, r.fix_i), "Fix_F identity: " + tag);
      c.expect(r.fix_t == truth_join(r.fix_u, r.fix_i), "Fix_T identity: " + tag);
    }
  }
  c.expect(programs.size() >= 500, "too few programs");
  return c;
}

Check conventional_semantics() {
  Check c;
  const auto programs = testing::program_corpus({ProgramKind::Conventional, 6, 3},
                                                kConventionalPrograms, 4242);
  for (const GroundProgram& gp : programs) {
    const std::string tag = render_ground_program(gp);
    c.expect(to_valuation(gp, well_founded(gp)) == fix_u(gp, F), "well-founded: " + tag);
    c.expect(to_valuation(gp, kripke_kleene(gp)) == fix_u(gp, U), "Kripke-Kleene: " + tag);
    for (const ThreeValuation& m : enumerate_stable_models(gp))
      c.expect(is_alpha_fixed_model(gp, F, to_valuation(gp, m)), "stable model: " + tag);
  }
  c.expect(programs.size() >= 200, "too few programs");
  return c;
}

Check skeptical_below() {
  Check c;
  for (const GroundProgram& gp : corpus()) {
    const ComparisonReport r = compare_semantics(gp);
    const std::string tag = render_ground_program(gp);
    c.expect(leq_k(r.fix_u(U), r.fix_u(F)), "below pessimistic: " + tag);
    c.expect(leq_k(r.fix_u(U), r.fix_u(T)), "below optimistic: " + tag);
    c.expect(leq_k(r.fix_u(U), know_meet(r.fix_u(F), r.fix_u(T))), "below consensus: " + tag);
  }
  for (ProgramKind kind : {ProgramKind::NegationFree, ProgramKind::PositiveConventional}) {
    for (const GroundProgram& gp : testing::program_corpus({kind, 6, 3}, kGeneralPrograms,
                                                           1000 + static_cast<std::uint32_t>(kind)))
      c.expect(fix_u(gp, U) == know_meet(fix_u(gp, F), fix_u(gp, T)),
               "equality on negation-free program: " + render_ground_program(gp));
  }
  return c;
}

Check brute_census() {
  Check c;
  for (const GroundProgram& gp : testing::program_corpus(
           {ProgramKind::AllConnectives, kCensusMaxAtoms, 3}, kCensusPrograms, 77)) {
    for (TruthValue alpha : kAllTruthValues) {
      const SemanticsResult r = solve(gp, alpha);
      const brute::Census census = brute::census(gp, alpha);
      const std::string tag = render_ground_program(gp) + " alpha " + to_char(alpha);
      bool has_u = false, has_i = false;
      for (const brute::Values& x : census.fixpoints) {
        has_u |= x == r.fix_u.values();
        has_i |= x == r.fix_i.values();
        c.expect(brute::leq_k(r.fix_u.values(), x), "fix_u not least: " + tag);
        c.expect(brute::leq_k(x, r.fix_i.values()), "fix_i not greatest: " + tag);
      }
      c.expect(has_u && has_i, "extreme fixpoint missing from census: " + tag);
      for (const auto& [x, y] : census.oscillations) {
        for (const brute::Values* p : {&x, &y}) {
          c.expect(brute::leq_t(r.fix_f.values(), *p), "Fix_F not below oscillation: " + tag);
          c.expect(brute::leq_t(*p, r.fix_t.values()), "Fix_T not above oscillation: " + tag);
        }
      }
    }
  }
  return c;
}

Check algebra() {
  Check c;
  c.expect(truth_meet(U, I) == F && truth_join(U, I) == T, "U and I under truth operators");
  c.expect(know_meet(F, T) == U && know_join(F, T) == I, "F and T under knowledge operators");
  c.expect(negation(U) == U && negation(I) == I && negation(T) == F && negation(F) == T,
           "negation table");
  for (TruthValue a : kAllTruthValues) {
    for (TruthValue b : kAllTruthValues) {
      c.expect(truth_meet(a, b) == brute::meet_t(a, b), "truth meet is glb");
      c.expect(truth_join(a, b) == brute::join_t(a, b), "truth join is lub");
      c.expect(know_meet(a, b) == brute::meet_k(a, b), "knowledge meet is glb");
      c.expect(know_join(a, b) == brute::join_k(a, b), "knowledge join is lub");
      c.expect(leq_t(a, b) == leq_t(negation(b), negation(a)), "negation reverses truth order");
      c.expect(leq_k(a, b) == leq_k(negation(a), negation(b)), "negation keeps knowledge order");
      for (TruthValue m : kAllTruthValues) {
        if (leq_t(a, m) && leq_t(m, b)) {
          c.expect(leq_k(know_meet(truth_meet(a, U), truth_join(b, U)), U), "triple bound 1");
          c.expect(leq_k(know_meet(truth_join(a, U), b), m), "triple bound 2");
          c.expect(leq_k(know_meet(truth_meet(a, U), truth_meet(b, U)), m), "triple bound 3");
          c.expect(leq_k(know_meet(a, b), m), "consensus of truth bounds");
          c.expect(leq_k(m, know_join(a, b)), "gullibility of truth bounds");
        }
        if (leq_k(a, m) && leq_k(m, b)) {
          c.expect(leq_t(truth_meet(a, b), m), "meet of knowledge bounds");
          c.expect(leq_t(m, truth_join(a, b)), "join of knowledge bounds");
        }
      }
    }
  }

  auto expect_laws = [&](const LawReport& report, const std::string& carrier) {
    std::size_t distributive = 0, interlacing = 0;
    for (const LawResult& law : report.laws) {
      c.expect(law.passed, carrier + " " + law.name + " " + law.counterexample);
      distributive += law.name.rfind("distributive:", 0) == 0;
      interlacing += law.name.rfind("interlacing:", 0) == 0;
    }
    c.expect(distributive == 12, carrier + " distributive law count");
    c.expect(interlacing == 8, carrier + " interlacing condition count");
  };
  expect_laws(check_bilattice_laws(four_table()), "FOUR");
  expect_laws(check_bilattice_laws(make_product(FiniteLattice::chain(3), FiniteLattice::chain(3))),
              "3x3");

  for (const GroundProgram& gp : corpus()) {
    for (TruthValue alpha : kAllTruthValues) {
      Valuation x = const_valuation(gp.base_ptr(), U);
      for (;;) {
        Valuation next = psi_prime(gp, alpha, psi_prime(gp, alpha, x));
        if (next == x) break;
        x = std::move(next);
      }
      c.expect(x == fix_u(gp, alpha),
               "squared map: " + render_ground_program(gp) + " alpha " + to_char(alpha));
    }
  }
  return c;
}

Check bottom_up_equivalence() {
  Check c;
  auto compare = [&](const GroundProgram& gp) {
    for (TruthValue alpha : kAllTruthValues)
      c.expect(from_interpretation(gp.base_ptr(), bottom_up_alpha_fixed(gp, alpha)) ==
                   fix_u(gp, alpha),
               render_ground_program(gp) + " alpha " + to_char(alpha));
  };
  for (const GroundProgram& gp : corpus()) compare(gp);
  for (const GroundProgram& gp : example_programs()) compare(gp);
  return c;
}

struct Criterion {
  const char* name;
  std::function<Check()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"suspect program table under F, T, U, I", suspect_table},
      {"worked example psi_prime under F from all-U", worked_example},
      {"b or not b table and consensus", excluded_middle_table},
      {"colleague table (normalized) and raw program regression", colleague_table},
      {"fixpoint identities on random programs", fixpoint_identities},
      {"well-founded, Kripke-Kleene and stable models on conventional programs",
       conventional_semantics},
      {"skeptical semantics below pessimistic, optimistic and consensus", skeptical_below},
      {"exhaustive fixpoint and oscillation census", brute_census},
      {"bilattice algebra, product bilattice and squared map", algebra},
      {"bottom-up algorithm equals fix_u", bottom_up_equivalence},
  };
  int failures = 0;
  int index = 0;
  for (const Criterion& criterion : criteria) {
    ++index;
    Check result;
    try {
      result = criterion.run();
    } catch (const std::exception& e) {
      result.first_failure = std::string("exception: ") + e.what();
    }
    if (result.passed()) {
      std::printf("PASS [%d] %s (%zu checks)\n", index, criterion.name, result.checks);
    } else {
      ++failures;
      std::printf("FAIL [%d] %s: %s\n", index, criterion.name, result.first_failure.c_str());
    }
  }
  return failures == 0 ? 0 : 1;
}
