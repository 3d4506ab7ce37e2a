// Finite lattices and the product bilattice construction L1 × L2, with an
// exhaustive checker for the bilattice laws (distributivity and interlacing).
//
// These exist to exercise the bilattice axioms on small carriers. The
// semantics engine itself runs on FOUR directly (see four.hpp).

#ifndef ALPHAFIX_LATTICE_HPP_
#define ALPHAFIX_LATTICE_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace alphafix {

/// A finite lattice given by an explicit partial order. Meets and joins are
/// derived from the order at construction time.
class FiniteLattice {
 public:
  using Element = std::size_t;

  // `leq[i][j]` is true iff element i ≤ element j. Throws
  // std::invalid_argument unless the relation is a partial order in which
  // every pair has a meet and a join.
  FiniteLattice(std::vector<std::string> names, std::vector<std::vector<bool>> leq);

  // 0 < 1 < ... < n-1.
  static FiniteLattice chain(std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Element e) const { return names_[e]; }
  bool leq(Element a, Element b) const { return leq_[a * size() + b]; }
  Element meet(Element a, Element b) const { return meet_[a * size() + b]; }
  Element join(Element a, Element b) const { return join_[a * size() + b]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  // Checks x∧(y∨z) = (x∧y)∨(x∧z) over all triples.
  bool is_distributive() const;

 private:
  std::vector<std::string> names_;
  std::vector<bool> leq_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// Operation tables of a finite bilattice over elements 0..size-1. Kept as
/// plain data so a checker can be pointed at an arbitrary (possibly broken)
/// table.
struct BilatticeTable {
  using Element = std::size_t;

  std::size_t size = 0;
  std::vector<std::string> names;
  std::vector<bool> leq_t;  // size × size, row-major
  std::vector<bool> leq_k;
  std::vector<Element> truth_meet;  // ∧
  std::vector<Element> truth_join;  // ∨
  std::vector<Element> know_meet;   // ⊗
  std::vector<Element> know_join;   // ⊕

  std::size_t at(Element a, Element b) const { return a * size + b; }
};

/// The table of FOUR itself, elements in F, T, U, I order.
BilatticeTable four_table();

/// Ginsberg's construction: ⟨x,y⟩ ≤t ⟨z,w⟩ iff x ≤ z and w ≤ y;
/// ⟨x,y⟩ ≤k ⟨z,w⟩ iff x ≤ z and y ≤ w.
class ProductBilattice {
 public:
  using Element = std::size_t;

  ProductBilattice(FiniteLattice belief, FiniteLattice doubt);

  std::size_t size() const { return table_.size; }
  std::pair<FiniteLattice::Element, FiniteLattice::Element> components(Element e) const;
  Element element(FiniteLattice::Element belief, FiniteLattice::Element doubt) const;

  Element truth_meet(Element a, Element b) const { return table_.truth_meet[table_.at(a, b)]; }
  Element truth_join(Element a, Element b) const { return table_.truth_join[table_.at(a, b)]; }
  Element know_meet(Element a, Element b) const { return table_.know_meet[table_.at(a, b)]; }
  Element know_join(Element a, Element b) const { return table_.know_join[table_.at(a, b)]; }
  bool leq_t(Element a, Element b) const { return table_.leq_t[table_.at(a, b)]; }
  bool leq_k(Element a, Element b) const { return table_.leq_k[table_.at(a, b)]; }

  // The four distinguished elements: ⟨top,bot⟩, ⟨bot,top⟩, ⟨bot,bot⟩, ⟨top,top⟩.
  Element true_element() const;
  Element false_element() const;
  Element unknown_element() const;
  Element inconsistent_element() const;

  const FiniteLattice& belief() const { return belief_; }
  const FiniteLattice& doubt() const { return doubt_; }
  const BilatticeTable& table() const { return table_; }

 private:
  FiniteLattice belief_;
  FiniteLattice doubt_;
  BilatticeTable table_;
};

ProductBilattice make_product(FiniteLattice belief, FiniteLattice doubt);

struct LawResult {
  std::string name;
  bool passed = true;
  std::string counterexample;  // empty when passed
};

struct LawReport {
  std::vector<LawResult> laws;

  bool all_passed() const;
  const LawResult* find(const std::string& name) const;
};

// Exhaustively checks, over all pairs and triples of elements:
//  - both orders are partial orders and each table computes the glb/lub of
//    its order ("lattice:*")
//  - the 12 distributive laws between ∧, ∨, ⊗, ⊕ ("distributive:x(y)")
//  - interlacing: every operator is monotone under both orders
//    ("interlacing:op/order")
LawReport check_bilattice_laws(const BilatticeTable& table);
LawReport check_bilattice_laws(const ProductBilattice& b);

}  // namespace alphafix

#endif  // ALPHAFIX_LATTICE_HPP_
