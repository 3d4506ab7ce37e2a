#include "alphafix/lattice.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "alphafix/four.hpp"

namespace alphafix {

namespace {

using Order = std::function<bool(std::size_t, std::size_t)>;

std::string describe(const std::vector<std::string>& names,
                     std::initializer_list<std::size_t> elements) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t e : elements) {
    out << (first ? "" : ", ") << names[e];
    first = false;
  }
  return out.str();
}

// Greatest lower bound of a and b under `leq`, if one exists.
std::optional<std::size_t> glb(std::size_t n, const Order& leq, std::size_t a, std::size_t b) {
  std::optional<std::size_t> best;
  for (std::size_t c = 0; c < n; ++c) {
    if (!leq(c, a) || !leq(c, b)) continue;
    if (!best || leq(*best, c)) {
      best = c;
    }
  }
  if (!best) return std::nullopt;
  for (std::size_t c = 0; c < n; ++c) {
    if (leq(c, a) && leq(c, b) && !leq(c, *best)) return std::nullopt;
  }
  return best;
}

std::optional<std::size_t> lub(std::size_t n, const Order& leq, std::size_t a, std::size_t b) {
  return glb(n, [&](std::size_t x, std::size_t y) { return leq(y, x); }, a, b);
}

}  // namespace

FiniteLattice::FiniteLattice(std::vector<std::string> names, std::vector<std::vector<bool>> leq)
    : names_(std::move(names)) {
  const std::size_t n = names_.size();
  if (n == 0) throw std::invalid_argument("lattice must be nonempty");
  if (leq.size() != n) throw std::invalid_argument("order matrix has wrong number of rows");
  leq_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n) throw std::invalid_argument("order matrix is not square");
    for (std::size_t j = 0; j < n; ++j) leq_[i * n + j] = leq[i][j];
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!this->leq(a, a)) throw std::invalid_argument("order is not reflexive at " + names_[a]);
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && this->leq(a, b) && this->leq(b, a)) {
        throw std::invalid_argument("order is not antisymmetric at " + names_[a] + ", " +
                                    names_[b]);
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (this->leq(a, b) && this->leq(b, c) && !this->leq(a, c)) {
          throw std::invalid_argument("order is not transitive at " + names_[a] + ", " +
                                      names_[b] + ", " + names_[c]);
        }
      }
    }
  }
  const Order order = [this](std::size_t a, std::size_t b) { return this->leq(a, b); };
  meet_.resize(n * n);
  join_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto m = glb(n, order, a, b);
      auto j = lub(n, order, a, b);
      if (!m || !j) {
        throw std::invalid_argument("no " + std::string(m ? "join" : "meet") + " for " +
                                    names_[a] + ", " + names_[b]);
      }
      meet_[a * n + b] = *m;
      join_[a * n + b] = *j;
    }
  }
  bottom_ = 0;
  top_ = 0;
  for (std::size_t a = 1; a < n; ++a) {
    bottom_ = meet(bottom_, a);
    top_ = join(top_, a);
  }
}

FiniteLattice FiniteLattice::chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (std::size_t j = i; j < n; ++j) leq[i][j] = true;
  }
  return FiniteLattice(std::move(names), std::move(leq));
}

bool FiniteLattice::is_distributive() const {
  const std::size_t n = size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return false;
  return true;
}

BilatticeTable four_table() {
  BilatticeTable t;
  t.size = kAllTruthValues.size();
  const std::size_t n = t.size;
  auto index = [](TruthValue v) {
    return static_cast<std::size_t>(
        std::find(kAllTruthValues.begin(), kAllTruthValues.end(), v) - kAllTruthValues.begin());
  };
  for (TruthValue v : kAllTruthValues) t.names.emplace_back(1, to_char(v));
  t.leq_t.resize(n * n);
  t.leq_k.resize(n * n);
  t.truth_meet.resize(n * n);
  t.truth_join.resize(n * n);
  t.know_meet.resize(n * n);
  t.know_join.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const TruthValue x = kAllTruthValues[a];
      const TruthValue y = kAllTruthValues[b];
      t.leq_t[t.at(a, b)] = leq_t(x, y);
      t.leq_k[t.at(a, b)] = leq_k(x, y);
      t.truth_meet[t.at(a, b)] = index(truth_meet(x, y));
      t.truth_join[t.at(a, b)] = index(truth_join(x, y));
      t.know_meet[t.at(a, b)] = index(know_meet(x, y));
      t.know_join[t.at(a, b)] = index(know_join(x, y));
    }
  }
  return t;
}

ProductBilattice::ProductBilattice(FiniteLattice belief, FiniteLattice doubt)
    : belief_(std::move(belief)), doubt_(std::move(doubt)) {
  const std::size_t n1 = belief_.size();
  const std::size_t n2 = doubt_.size();
  table_.size = n1 * n2;
  const std::size_t n = table_.size;
  for (std::size_t e = 0; e < n; ++e) {
    auto [x, y] = components(e);
    table_.names.push_back("<" + belief_.name(x) + "," + doubt_.name(y) + ">");
  }
  table_.leq_t.resize(n * n);
  table_.leq_k.resize(n * n);
  table_.truth_meet.resize(n * n);
  table_.truth_join.resize(n * n);
  table_.know_meet.resize(n * n);
  table_.know_join.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    auto [x, y] = components(a);
    for (std::size_t b = 0; b < n; ++b) {
      auto [z, w] = components(b);
      const std::size_t i = table_.at(a, b);
      table_.leq_t[i] = belief_.leq(x, z) && doubt_.leq(w, y);
      table_.leq_k[i] = belief_.leq(x, z) && doubt_.leq(y, w);
      table_.truth_meet[i] = element(belief_.meet(x, z), doubt_.join(y, w));
      table_.truth_join[i] = element(belief_.join(x, z), doubt_.meet(y, w));
      table_.know_meet[i] = element(belief_.meet(x, z), doubt_.meet(y, w));
      table_.know_join[i] = element(belief_.join(x, z), doubt_.join(y, w));
    }
  }
}

std::pair<FiniteLattice::Element, FiniteLattice::Element> ProductBilattice::components(
    Element e) const {
  return {e / doubt_.size(), e % doubt_.size()};
}

ProductBilattice::Element ProductBilattice::element(FiniteLattice::Element belief,
                                                    FiniteLattice::Element doubt) const {
  return belief * doubt_.size() + doubt;
}

ProductBilattice::Element ProductBilattice::true_element() const {
  return element(belief_.top(), doubt_.bottom());
}
ProductBilattice::Element ProductBilattice::false_element() const {
  return element(belief_.bottom(), doubt_.top());
}
ProductBilattice::Element ProductBilattice::unknown_element() const {
  return element(belief_.bottom(), doubt_.bottom());
}
ProductBilattice::Element ProductBilattice::inconsistent_element() const {
  return element(belief_.top(), doubt_.top());
}

ProductBilattice make_product(FiniteLattice belief, FiniteLattice doubt) {
  return ProductBilattice(std::move(belief), std::move(doubt));
}

bool LawReport::all_passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& r) { return r.passed; });
}

const LawResult* LawReport::find(const std::string& name) const {
  for (const auto& law : laws)
    if (law.name == name) return &law;
  return nullptr;
}

namespace {

struct NamedOp {
  const char* name;
  const std::vector<std::size_t>* table;
};

struct NamedOrder {
  const char* name;
  const std::vector<bool>* leq;
};

}  // namespace

LawReport check_bilattice_laws(const BilatticeTable& t) {
  LawReport report;
  const std::size_t n = t.size;
  const auto& names = t.names;

  const NamedOrder orders[] = {{"leq_t", &t.leq_t}, {"leq_k", &t.leq_k}};
  const NamedOp ops[] = {{"and", &t.truth_meet},
                         {"or", &t.truth_join},
                         {"otimes", &t.know_meet},
                         {"oplus", &t.know_join}};

  for (const auto& order : orders) {
    LawResult r{std::string("lattice:") + order.name + " partial order", true, {}};
    const auto& leq = *order.leq;
    for (std::size_t a = 0; a < n && r.passed; ++a) {
      if (!leq[t.at(a, a)]) {
        r = {r.name, false, describe(names, {a})};
        break;
      }
      for (std::size_t b = 0; b < n && r.passed; ++b) {
        if (a != b && leq[t.at(a, b)] && leq[t.at(b, a)]) r = {r.name, false, describe(names, {a, b})};
        for (std::size_t c = 0; c < n && r.passed; ++c) {
          if (leq[t.at(a, b)] && leq[t.at(b, c)] && !leq[t.at(a, c)]) {
            r = {r.name, false, describe(names, {a, b, c})};
          }
        }
      }
    }
    report.laws.push_back(std::move(r));
  }

  // Each table must be the glb/lub of its own ordering.
  struct Bound {
    const NamedOp* op;
    const NamedOrder* order;
    bool is_meet;
  };
  const Bound bounds[] = {{&ops[0], &orders[0], true},
                          {&ops[1], &orders[0], false},
                          {&ops[2], &orders[1], true},
                          {&ops[3], &orders[1], false}};
  for (const auto& bound : bounds) {
    const auto& leq = *bound.order->leq;
    const Order order = bound.is_meet
                            ? Order([&](std::size_t a, std::size_t b) { return leq[t.at(a, b)]; })
                            : Order([&](std::size_t a, std::size_t b) { return leq[t.at(b, a)]; });
    LawResult r{std::string("lattice:") + bound.op->name + " is " + (bound.is_meet ? "glb" : "lub") +
                    " of " + bound.order->name,
                true,
                {}};
    for (std::size_t a = 0; a < n && r.passed; ++a) {
      for (std::size_t b = 0; b < n && r.passed; ++b) {
        auto expected = glb(n, order, a, b);
        if (!expected || *expected != (*bound.op->table)[t.at(a, b)]) {
          r = {r.name, false, describe(names, {a, b})};
        }
      }
    }
    report.laws.push_back(std::move(r));
  }

  // x ∘ (y • z) = (x ∘ y) • (x ∘ z) for every ordered pair of distinct operators.
  for (const auto& outer : ops) {
    for (const auto& inner : ops) {
      if (outer.table == inner.table) continue;
      LawResult r{std::string("distributive:") + outer.name + "/" + inner.name, true, {}};
      const auto& o = *outer.table;
      const auto& i = *inner.table;
      for (std::size_t x = 0; x < n && r.passed; ++x)
        for (std::size_t y = 0; y < n && r.passed; ++y)
          for (std::size_t z = 0; z < n && r.passed; ++z)
            if (o[t.at(x, i[t.at(y, z)])] != i[t.at(o[t.at(x, y)], o[t.at(x, z)])])
              r = {r.name, false, describe(names, {x, y, z})};
      report.laws.push_back(std::move(r));
    }
  }

  // Monotonicity of every operator in both arguments under both orders.
  for (const auto& op : ops) {
    for (const auto& order : orders) {
      LawResult r{std::string("interlacing:") + op.name + "/" + order.name, true, {}};
      const auto& f = *op.table;
      const auto& leq = *order.leq;
      for (std::size_t x1 = 0; x1 < n && r.passed; ++x1)
        for (std::size_t y1 = 0; y1 < n && r.passed; ++y1) {
          if (!leq[t.at(x1, y1)]) continue;
          for (std::size_t x2 = 0; x2 < n && r.passed; ++x2)
            for (std::size_t y2 = 0; y2 < n && r.passed; ++y2) {
              if (!leq[t.at(x2, y2)]) continue;
              if (!leq[t.at(f[t.at(x1, x2)], f[t.at(y1, y2)])])
                r = {r.name, false, describe(names, {x1, y1, x2, y2})};
            }
        }
      report.laws.push_back(std::move(r));
    }
  }
  return report;
}

LawReport check_bilattice_laws(const ProductBilattice& b) { return check_bilattice_laws(b.table()); }

}  // namespace alphafix
