#include <gtest/gtest.h>

#include <stdexcept>

#include "alphafix/lattice.hpp"

namespace alphafix {
namespace {

std::size_t count_laws(const LawReport& r, const std::string& prefix) {
  std::size_t n = 0;
  for (const LawResult& l : r.laws) n += l.name.rfind(prefix, 0) == 0;
  return n;
}

FiniteLattice diamond() {
  // M3: bottom, three pairwise incomparable atoms, top.
  std::vector<std::vector<bool>> leq(5, std::vector<bool>(5, false));
  for (std::size_t i = 0; i < 5; ++i) {
    leq[i][i] = true;
    leq[0][i] = true;
    leq[i][4] = true;
  }
  return FiniteLattice({"0", "a", "b", "c", "1"}, leq);
}

TEST(FiniteLattice, ChainIsDistributive) {
  const FiniteLattice c = FiniteLattice::chain(3);
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(c.bottom(), 0u);
  EXPECT_EQ(c.top(), 2u);
  EXPECT_EQ(c.meet(1, 2), 1u);
  EXPECT_EQ(c.join(0, 1), 1u);
  EXPECT_TRUE(c.is_distributive());
}

TEST(FiniteLattice, DiamondIsNotDistributive) {
  const FiniteLattice m3 = diamond();
  EXPECT_EQ(m3.meet(1, 2), 0u);
  EXPECT_EQ(m3.join(1, 2), 4u);
  EXPECT_FALSE(m3.is_distributive());
}

TEST(FiniteLattice, RejectsNonLattices) {
  // Two incomparable elements without a common bound.
  EXPECT_THROW(FiniteLattice({"a", "b"}, {{true, false}, {false, true}}), std::invalid_argument);
  // Not antisymmetric.
  EXPECT_THROW(FiniteLattice({"a", "b"}, {{true, true}, {true, true}}), std::invalid_argument);
  // Not reflexive.
  EXPECT_THROW(FiniteLattice({"a"}, {{false}}), std::invalid_argument);
  // Not transitive.
  EXPECT_THROW(FiniteLattice({"a", "b", "c"},
                             {{true, true, false}, {false, true, true}, {false, false, true}}),
               std::invalid_argument);
}

TEST(ProductBilattice, TwoByTwoIsFour) {
  const ProductBilattice b = make_product(FiniteLattice::chain(2), FiniteLattice::chain(2));
  ASSERT_EQ(b.size(), 4u);
  const auto t = b.true_element(), f = b.false_element(), u = b.unknown_element(),
             i = b.inconsistent_element();
  EXPECT_EQ(b.components(t), std::make_pair(std::size_t{1}, std::size_t{0}));
  EXPECT_EQ(b.components(f), std::make_pair(std::size_t{0}, std::size_t{1}));
  EXPECT_EQ(b.truth_meet(u, i), f);
  EXPECT_EQ(b.truth_join(u, i), t);
  EXPECT_EQ(b.know_meet(f, t), u);
  EXPECT_EQ(b.know_join(f, t), i);
  EXPECT_TRUE(b.leq_k(u, f));
  EXPECT_TRUE(b.leq_t(f, u));
  EXPECT_FALSE(b.leq_t(u, i));
  EXPECT_FALSE(b.leq_k(f, t));

  // Isomorphism with the direct FOUR table.
  const BilatticeTable four = four_table();
  auto to_four = [&](std::size_t e) -> std::size_t {
    for (std::size_t k = 0; k < four.size; ++k) {
      if (e == t && four.names[k] == "T") return k;
      if (e == f && four.names[k] == "F") return k;
      if (e == u && four.names[k] == "U") return k;
      if (e == i && four.names[k] == "I") return k;
    }
    return four.size;
  };
  for (std::size_t x = 0; x < 4; ++x) {
    for (std::size_t y = 0; y < 4; ++y) {
      const std::size_t fx = to_four(x), fy = to_four(y);
      EXPECT_EQ(to_four(b.truth_meet(x, y)), four.truth_meet[four.at(fx, fy)]);
      EXPECT_EQ(to_four(b.truth_join(x, y)), four.truth_join[four.at(fx, fy)]);
      EXPECT_EQ(to_four(b.know_meet(x, y)), four.know_meet[four.at(fx, fy)]);
      EXPECT_EQ(to_four(b.know_join(x, y)), four.know_join[four.at(fx, fy)]);
      EXPECT_EQ(b.leq_t(x, y), four.leq_t[four.at(fx, fy)]);
      EXPECT_EQ(b.leq_k(x, y), four.leq_k[four.at(fx, fy)]);
    }
  }
}

TEST(ProductBilattice, SingletonFactorsGiveDegenerateBilattice) {
  const ProductBilattice b = make_product(FiniteLattice::chain(1), FiniteLattice::chain(1));
  EXPECT_EQ(b.size(), 1u);
  EXPECT_EQ(b.true_element(), b.false_element());
  EXPECT_TRUE(check_bilattice_laws(b).all_passed());
}

TEST(ProductBilattice, ThreeByThreeSatisfiesAllLaws) {
  const ProductBilattice b = make_product(FiniteLattice::chain(3), FiniteLattice::chain(3));
  EXPECT_EQ(b.size(), 9u);
  const LawReport r = check_bilattice_laws(b);
  EXPECT_EQ(count_laws(r, "distributive:"), 12u);
  EXPECT_EQ(count_laws(r, "interlacing:"), 8u);
  for (const LawResult& law : r.laws) EXPECT_TRUE(law.passed) << law.name;
}

TEST(ProductBilattice, TruthOrderReversesDoubt) {
  const ProductBilattice b = make_product(FiniteLattice::chain(3), FiniteLattice::chain(2));
  for (std::size_t x = 0; x < b.size(); ++x) {
    for (std::size_t y = 0; y < b.size(); ++y) {
      const auto [x1, x2] = b.components(x);
      const auto [y1, y2] = b.components(y);
      EXPECT_EQ(b.leq_t(x, y), x1 <= y1 && y2 <= x2);
      EXPECT_EQ(b.leq_k(x, y), x1 <= y1 && x2 <= y2);
    }
  }
}

TEST(ProductBilattice, NonDistributiveFactorStillInterlaces) {
  const ProductBilattice b = make_product(diamond(), FiniteLattice::chain(2));
  const LawReport r = check_bilattice_laws(b);
  for (const LawResult& law : r.laws)
    if (law.name.rfind("interlacing:", 0) == 0) EXPECT_TRUE(law.passed) << law.name;
  EXPECT_FALSE(r.all_passed());
}

TEST(LawReport, CorruptedMeetTableIsNamed) {
  BilatticeTable t = four_table();
  // Swap two entries of ∧ so it is no longer the glb.
  std::size_t u = 0, i = 0;
  for (std::size_t k = 0; k < t.size; ++k) {
    if (t.names[k] == "U") u = k;
    if (t.names[k] == "I") i = k;
  }
  t.truth_meet[t.at(u, i)] = u;
  t.truth_meet[t.at(i, u)] = u;
  const LawReport r = check_bilattice_laws(t);
  EXPECT_FALSE(r.all_passed());
  const LawResult* glb = r.find("lattice:and is glb of leq_t");
  ASSERT_NE(glb, nullptr);
  EXPECT_FALSE(glb->passed);
  EXPECT_FALSE(glb->counterexample.empty());
}

}  // namespace
}  // namespace alphafix
