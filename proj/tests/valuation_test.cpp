#include <gtest/gtest.h>

#include <random>

#include "alphafix/syntax.hpp"
#include "alphafix/valuation.hpp"
#include "alphafix/valuation_io.hpp"
#include "brute_force.hpp"
#include "generators.hpp"

namespace alphafix {
namespace {

using namespace values;
namespace brute = testing::brute;

TEST(Valuation, ConstantValuations) {
  const AtomTablePtr base = testing::propositional_base(3);
  const Valuation u = const_valuation(base, U);
  for (TruthValue a : kAllTruthValues) {
    const Valuation v = const_valuation(base, a);
    EXPECT_TRUE(leq_k(u, v));
    EXPECT_TRUE(leq_k(v, const_valuation(base, I)));
    EXPECT_TRUE(leq_t(const_valuation(base, F), v));
    EXPECT_TRUE(leq_t(v, const_valuation(base, T)));
  }
  const Valuation empty = const_valuation(testing::propositional_base(0), T);
  EXPECT_EQ(empty.size(), 0u);
}

TEST(Valuation, PointwiseOperators) {
  std::mt19937 rng(1);
  const AtomTablePtr base = testing::propositional_base(3);
  for (int i = 0; i < 300; ++i) {
    const Valuation v = testing::random_valuation(rng, base);
    const Valuation w = testing::random_valuation(rng, base);
    const Valuation m = know_meet(v, w);
    for (AtomId a = 0; a < 3; ++a) {
      EXPECT_EQ(m[a], know_meet(v[a], w[a]));
      EXPECT_EQ(truth_join(v, w)[a], truth_join(v[a], w[a]));
      EXPECT_EQ(negation(v)[a], negation(v[a]));
      EXPECT_EQ(conflation(v)[a], conflation(v[a]));
    }
    EXPECT_TRUE(leq_k(m, v));
    EXPECT_TRUE(leq_k(v, know_join(v, w)));
    EXPECT_TRUE(leq_t(truth_meet(v, w), v));
    EXPECT_TRUE(leq_t(v, truth_join(v, w)));
  }
}

TEST(Valuation, BaseMismatchIsAnError) {
  const Valuation a = const_valuation(testing::propositional_base(2), U);
  const Valuation b = const_valuation(testing::propositional_base(3), U);
  EXPECT_THROW((void)leq_t(a, b), BaseMismatch);
  EXPECT_THROW((void)(a == b), BaseMismatch);
  EXPECT_THROW(know_meet(a, b), BaseMismatch);
  EXPECT_THROW((void)a.at("p7"), BaseMismatch);
  EXPECT_THROW(Valuation(testing::propositional_base(2), std::vector<TruthValue>{T}), BaseMismatch);
  // Equal content counts as the same base.
  EXPECT_TRUE(a == const_valuation(testing::propositional_base(2), U));
}

TEST(Contrajoin, ReadsNegatedAtomsFromSecondValuation) {
  const GroundProgram gp = ground(parse_program("x <- innocent. y <- ~innocent."));
  const AtomId innocent = *gp.base().find("innocent");
  Valuation v = const_valuation(gp.base_ptr(), U);
  Valuation w = const_valuation(gp.base_ptr(), U);
  v.set(innocent, T);
  EXPECT_EQ(contrajoin_eval(v, w, gp.rule_for(*gp.base().find("x"))->body), T);
  EXPECT_EQ(contrajoin_eval(v, w, gp.rule_for(*gp.base().find("y"))->body), U);
  EXPECT_EQ(contrajoin_eval(v, w, GroundFormula::constant(I)), I);
  EXPECT_THROW(contrajoin_eval(v, w, GroundFormula::atom(9)), BaseMismatch);
}

TEST(Contrajoin, AgreesWithReferenceEvaluator) {
  std::mt19937 rng(2);
  const AtomTablePtr base = testing::propositional_base(4);
  for (int i = 0; i < 1000; ++i) {
    const GroundFormula f = testing::random_ground_formula(rng, 4, 4);
    const Valuation v = testing::random_valuation(rng, base);
    const Valuation w = testing::random_valuation(rng, base);
    EXPECT_EQ(contrajoin_eval(v, w, f), brute::eval(f, v.values(), w.values()));
    EXPECT_EQ(eval(v, f), contrajoin_eval(v, v, f));
  }
}

TEST(Contrajoin, CrossMonotone) {
  std::mt19937 rng(3);
  const AtomTablePtr base = testing::propositional_base(3);
  int k_cases = 0, t_cases = 0;
  for (int i = 0; i < 4000; ++i) {
    const GroundFormula f = testing::random_ground_formula(rng, 3, 3);
    const Valuation v1 = testing::random_valuation(rng, base);
    const Valuation v2 = testing::random_valuation(rng, base);
    const Valuation w1 = testing::random_valuation(rng, base);
    const Valuation w2 = testing::random_valuation(rng, base);
    if (leq_k(v1, v2) && leq_k(w1, w2)) {
      ++k_cases;
      EXPECT_TRUE(leq_k(contrajoin_eval(v1, w1, f), contrajoin_eval(v2, w2, f)));
    }
    if (leq_t(v1, v2) && leq_t(w2, w1)) {
      ++t_cases;
      EXPECT_TRUE(leq_t(contrajoin_eval(v1, w1, f), contrajoin_eval(v2, w2, f)));
    }
    // Same-base pairs built to satisfy both premises.
    const Valuation lo = know_meet(v1, v2), hi = know_join(v1, v2);
    EXPECT_TRUE(leq_k(contrajoin_eval(lo, know_meet(w1, w2), f),
                      contrajoin_eval(hi, know_join(w1, w2), f)));
    EXPECT_TRUE(leq_t(contrajoin_eval(truth_meet(v1, v2), truth_join(w1, w2), f),
                      contrajoin_eval(truth_join(v1, v2), truth_meet(w1, w2), f)));
  }
  EXPECT_GT(k_cases, 0);
  EXPECT_GT(t_cases, 0);
}

TEST(Interpretation, Bijection) {
  const AtomTablePtr base = testing::propositional_base(4);
  const Valuation v(base, std::vector<TruthValue>{F, T, U, I});
  const Interpretation i = to_interpretation(v);
  EXPECT_EQ(i.true_set, (std::set<AtomId>{1, 3}));
  EXPECT_EQ(i.false_set, (std::set<AtomId>{0, 3}));
  EXPECT_EQ(from_interpretation(base, i), v);
  const Interpretation none = to_interpretation(const_valuation(base, U));
  EXPECT_TRUE(none.true_set.empty() && none.false_set.empty());
  EXPECT_THROW(from_interpretation(base, Interpretation{{7}, {}}), BaseMismatch);
  for (const auto& values : brute::all_valuations(4)) {
    const Valuation x(base, values);
    EXPECT_EQ(from_interpretation(base, to_interpretation(x)), x);
  }
}

TEST(PseudoEval, MatchesContrajoin) {
  std::mt19937 rng(4);
  const AtomTablePtr base = testing::propositional_base(5);
  for (int i = 0; i < 1000; ++i) {
    const GroundFormula f = testing::random_ground_formula(rng, 5, 4);
    const Valuation v = testing::random_valuation(rng, base);
    const Valuation w = testing::random_valuation(rng, base);
    const PseudoInterpretation j{to_interpretation(v), to_interpretation(w)};
    EXPECT_EQ(pseudo_eval(j, f, base->size()), contrajoin_eval(v, w, f));
  }
}

TEST(PseudoEval, Examples) {
  const GroundProgram gp = ground(parse_program("d <- ~b + #t. e <- ~b."));
  const AtomId b = *gp.base().find("b");
  PseudoInterpretation j;
  j.pos.true_set.insert(b);
  EXPECT_EQ(pseudo_eval(j, gp.rule_for(*gp.base().find("e"))->body, gp.base().size()), U);
  EXPECT_EQ(pseudo_eval(j, gp.rule_for(*gp.base().find("d"))->body, gp.base().size()), T);
  EXPECT_THROW(pseudo_eval(j, GroundFormula::neg_atom(40), gp.base().size()), BaseMismatch);
}

TEST(ValuationIo, TsvAndJsonRoundTrip) {
  std::mt19937 rng(5);
  const GroundProgram gp = ground(parse_program("q(X) <- exists Y: r(X,Y) & ~q(Y). r(a,b). r(b,c)."));
  for (int i = 0; i < 50; ++i) {
    const Valuation v = testing::random_valuation(rng, gp.base_ptr());
    EXPECT_EQ(parse_valuation(to_tsv(v), gp.base_ptr()), v);
    EXPECT_EQ(parse_valuation(to_json(v), gp.base_ptr()), v);
  }
}

TEST(ValuationIo, Format) {
  const GroundProgram gp = ground(parse_program("a <- b."));
  const Valuation v(gp.base_ptr(), std::vector<TruthValue>{T, I});
  EXPECT_EQ(to_tsv(v), "a\tT\nb\tI\n");
  EXPECT_EQ(to_json(v), R"({"a":"T","b":"I"})");
}

TEST(ValuationIo, ErrorsNameTheAtom) {
  const GroundProgram gp = ground(parse_program("a <- b."));
  auto message = [&](const std::string& text) {
    try {
      parse_valuation(text, gp.base_ptr());
    } catch (const ValuationFormatError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("a T\n").find("missing atom b"), std::string::npos);
  EXPECT_NE(message("a T\nb F\nc U\n").find("unknown atom c"), std::string::npos);
  EXPECT_NE(message("a T\nb Q\n").find("bad value 'Q' for atom b"), std::string::npos);
  EXPECT_NE(message("a T\na F\nb U\n").find("atom a assigned twice"), std::string::npos);
  EXPECT_NE(message("a T x\nb U\n").find("line 1"), std::string::npos);
  EXPECT_NE(message(R"({"a":"T"})").find("missing atom b"), std::string::npos);
  EXPECT_NE(message("{ not json").find("malformed"), std::string::npos);
  EXPECT_EQ(message("% comment\na T % trailing\n\nb U\n"), "no error");
}

}  // namespace
}  // namespace alphafix
