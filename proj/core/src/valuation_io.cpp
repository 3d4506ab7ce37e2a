#include "alphafix/valuation_io.hpp"

#include <json.hpp>
#include <optional>
#include <sstream>

namespace alphafix {

std::string to_tsv(const Valuation& v) {
  std::string out;
  for (AtomId i = 0; i < v.size(); ++i) {
    out += v.base().name(i);
    out += '\t';
    out += to_char(v[i]);
    out += '\n';
  }
  return out;
}

std::string to_json(const Valuation& v) {
  nlohmann::json j = nlohmann::json::object();
  for (AtomId i = 0; i < v.size(); ++i) j[v.base().name(i)] = std::string(1, to_char(v[i]));
  return j.dump();
}

namespace {

class Builder {
 public:
  explicit Builder(AtomTablePtr base) : base_(std::move(base)), values_(base_->size()) {}

  void add(const std::string& atom, const std::string& value) {
    auto id = base_->find(atom);
    if (!id) throw ValuationFormatError("unknown atom " + atom);
    if (values_[*id]) throw ValuationFormatError("atom " + atom + " assigned twice");
    std::optional<TruthValue> v;
    if (value.size() == 1) v = truth_value_from_char(value[0]);
    if (!v) throw ValuationFormatError("bad value '" + value + "' for atom " + atom);
    values_[*id] = *v;
  }

  Valuation finish() && {
    std::vector<TruthValue> out(values_.size());
    for (AtomId i = 0; i < values_.size(); ++i) {
      if (!values_[i]) throw ValuationFormatError("missing atom " + base_->name(i));
      out[i] = *values_[i];
    }
    return Valuation(std::move(base_), std::move(out));
  }

 private:
  AtomTablePtr base_;
  std::vector<std::optional<TruthValue>> values_;
};

}  // namespace

Valuation parse_valuation(std::string_view text, AtomTablePtr base) {
  Builder builder(std::move(base));
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ValuationFormatError(std::string("malformed JSON valuation: ") + e.what());
    }
    if (!j.is_object()) throw ValuationFormatError("JSON valuation must be an object");
    for (const auto& [atom, value] : j.items()) {
      if (!value.is_string()) throw ValuationFormatError("bad value for atom " + atom);
      builder.add(atom, value.get<std::string>());
    }
    return std::move(builder).finish();
  }

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto pct = line.find('%'); pct != std::string::npos) line.erase(pct);
    std::istringstream fields(line);
    std::string atom, value, extra;
    if (!(fields >> atom)) continue;
    if (!(fields >> value) || (fields >> extra)) {
      throw ValuationFormatError("line " + std::to_string(line_no) +
                                 ": expected 'atom value'");
    }
    builder.add(atom, value);
  }
  return std::move(builder).finish();
}

}  // namespace alphafix
