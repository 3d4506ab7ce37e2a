#include "alphafix/bottom_up.hpp"

#include <optional>
#include <utility>

namespace alphafix {

namespace {

using AtomSet = std::set<AtomId>;
using SetPair = std::pair<AtomSet, AtomSet>;

AtomSet set_union(AtomSet a, const AtomSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

}  // namespace

Interpretation bottom_up_alpha_fixed(const GroundProgram& gp, TruthValue alpha) {
  const std::size_t n = gp.base().size();
  AtomSet all;
  for (AtomId a = 0; a < n; ++a) all.insert(a);
  const AtomSet not_heads(gp.not_heads().begin(), gp.not_heads().end());

  AtomSet res_true;
  AtomSet res_false;
  std::optional<SetPair> tmp_res;

  AtomSet init_true, init_false, not_head_true, not_head_false;
  switch (alpha) {
    case TruthValue::True:
      init_true = all;
      not_head_true = not_heads;
      break;
    case TruthValue::False:
      init_false = all;
      not_head_false = not_heads;
      break;
    case TruthValue::Inconsistent:
      init_true = all;
      init_false = all;
      not_head_true = not_heads;
      not_head_false = not_heads;
      break;
    case TruthValue::Unknown:
      break;
  }

  while (!tmp_res || *tmp_res != SetPair{res_true, res_false}) {
    tmp_res = SetPair{res_true, res_false};
    AtomSet iter_true = init_true;
    AtomSet iter_false = init_false;
    std::optional<SetPair> tmp_iter;
    while (!tmp_iter || *tmp_iter != SetPair{iter_true, iter_false}) {
      tmp_iter = SetPair{iter_true, iter_false};
      AtomSet im_t, im_f, im_i;
      const PseudoInterpretation j{{iter_true, iter_false}, {res_true, res_false}};
      for (const GroundRule& c : gp.rules()) {
        switch (pseudo_eval(j, c.body, n)) {
          case TruthValue::True: im_t.insert(c.head); break;
          case TruthValue::False: im_f.insert(c.head); break;
          case TruthValue::Inconsistent: im_i.insert(c.head); break;
          case TruthValue::Unknown: break;
        }
      }
      iter_true = set_union(set_union(im_t, im_i), not_head_true);
      iter_false = set_union(set_union(im_f, im_i), not_head_false);
    }
    res_true = set_union(res_true, iter_true);
    res_false = set_union(res_false, iter_false);
  }
  return Interpretation{res_true, res_false};
}

}  // namespace alphafix
