// Instantiation of a program over its Herbrand universe (Inst-P).
//
// Variables are replaced by every constant of the domain, ∃/∀ are expanded
// into ∨/∧ folds over the domain, equalities and guards are resolved to truth
// constants, and all ground rules sharing a head are merged into one body by
// folding with ∨. The result has exactly one body per rule head.

#ifndef ALPHAFIX_GROUND_HPP_
#define ALPHAFIX_GROUND_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "alphafix/four.hpp"
#include "alphafix/syntax.hpp"

namespace alphafix {

struct GroundAtom {
  std::string predicate;
  std::vector<std::string> args;

  std::string to_string() const;

  friend bool operator==(const GroundAtom&, const GroundAtom&) = default;
};

using AtomId = std::uint32_t;

/// The ordered set of ground atoms a valuation is defined on. Atoms are
/// sorted by their rendered text, so AtomId order is output order.
class AtomTable {
 public:
  AtomTable() = default;
  explicit AtomTable(std::vector<GroundAtom> atoms);

  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  const GroundAtom& atom(AtomId id) const { return atoms_[id]; }
  const std::string& name(AtomId id) const { return names_[id]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<AtomId> find(std::string_view name) const;

  friend bool operator==(const AtomTable& a, const AtomTable& b) { return a.names_ == b.names_; }

 private:
  std::vector<GroundAtom> atoms_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, AtomId> index_;
};

using AtomTablePtr = std::shared_ptr<const AtomTable>;

enum class GroundOp : std::uint8_t { Atom, NegAtom, Const, And, Or, Consensus, Gullibility };

struct GroundNode {
  GroundOp op = GroundOp::Const;
  TruthValue value = TruthValue::Unknown;  // Const only
  AtomId atom = 0;                         // Atom / NegAtom only
  std::uint32_t lhs = 0;                   // binary ops: node indices
  std::uint32_t rhs = 0;
};

/// A variable-free, quantifier-free body. Nodes are stored in post-order:
/// children precede their parent and the root is the last node.
class GroundFormula {
 public:
  GroundFormula() = default;

  static GroundFormula constant(TruthValue v);
  static GroundFormula atom(AtomId id);
  static GroundFormula neg_atom(AtomId id);
  static GroundFormula binary(GroundOp op, const GroundFormula& lhs, const GroundFormula& rhs);

  const std::vector<GroundNode>& nodes() const { return nodes_; }
  std::uint32_t root() const { return static_cast<std::uint32_t>(nodes_.size() - 1); }
  const GroundNode& node(std::uint32_t i) const { return nodes_[i]; }
  bool empty() const { return nodes_.empty(); }

  // Rewrites every atom id through `mapping`.
  GroundFormula remap(const std::vector<AtomId>& mapping) const;

  friend bool operator==(const GroundFormula&, const GroundFormula&);

 private:
  std::vector<GroundNode> nodes_;
};

struct GroundRule {
  AtomId head = 0;
  GroundFormula body;
  std::size_t merged = 1;  // number of ground clause instances folded into body
};

enum class BaseMode {
  // Every atom that occurs in Inst-P (as a head or in a body).
  Occurring,
  // Every predicate applied to every tuple of domain constants.
  Full,
};

struct GroundOptions {
  BaseMode base = BaseMode::Occurring;
  // Added to the constants occurring in the program.
  std::vector<std::string> extra_constants;
};

class GroundProgram {
 public:
  GroundProgram(AtomTablePtr base, std::vector<GroundRule> rules);

  const AtomTablePtr& base_ptr() const { return base_; }
  const AtomTable& base() const { return *base_; }
  const std::vector<GroundRule>& rules() const { return rules_; }
  const std::vector<AtomId>& not_heads() const { return not_heads_; }
  // The rule whose head is `id`, if any.
  const GroundRule* rule_for(AtomId id) const;
  bool is_head(AtomId id) const { return rule_for(id) != nullptr; }

 private:
  AtomTablePtr base_;
  std::vector<GroundRule> rules_;  // sorted by head
  std::vector<AtomId> not_heads_;
  std::vector<std::int32_t> rule_index_;
};

GroundProgram ground(const Program& p, const GroundOptions& options = {});

/// The full Herbrand base: every predicate of `p` over every tuple of the
/// domain constants, sorted.
std::vector<GroundAtom> herbrand_base(const Program& p, const GroundOptions& options = {});

/// One clause per rule head, in the program syntax.
std::string render_ground_program(const GroundProgram& gp);
std::string render_ground_formula(const GroundFormula& f, const AtomTable& base);

}  // namespace alphafix

#endif  // ALPHAFIX_GROUND_HPP_
