#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "nlie/algebra.hpp"
#include "nlie/metric.hpp"

namespace nlie {

/// A rejected input file: malformed JSON (with byte offset) or a schema
/// violation (with the offending field's path).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An algebra plus an optional form, as read from or written to disk.
struct AlgebraFile {
  NLieAlgebra algebra;
  std::optional<SymForm> form;
};

namespace detail {

inline Rational parse_rational_field(const nlohmann::json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": rational values must be strings");
  auto r = parse_rational(j.get<std::string>());
  if (!r) throw ParseError(where + ": not a rational \"p/q\" string: " + j.get<std::string>());
  return *r;
}

inline void reject_unknown_keys(const nlohmann::json& obj,
                                std::initializer_list<const char*> allowed,
                                const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) throw ParseError(where + ": unknown key \"" + it.key() + "\"");
  }
}

inline int parse_positive_int(const nlohmann::json& j, const std::string& where, int min) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  long long v = j.get<long long>();
  if (v < min || v > 1'000'000) throw ParseError(where + ": out of range");
  return static_cast<int>(v);
}

}  // namespace detail

inline AlgebraFile parse_algebra_json(const nlohmann::json& root) {
  if (!root.is_object()) throw ParseError("top level: expected an object");
  detail::reject_unknown_keys(root, {"arity", "dim", "brackets", "gram"}, "top level");
  if (!root.contains("arity") || !root.contains("dim") || !root.contains("brackets"))
    throw ParseError("top level: \"arity\", \"dim\" and \"brackets\" are required");
  int n = detail::parse_positive_int(root.at("arity"), "arity", 2);
  int d = detail::parse_positive_int(root.at("dim"), "dim", 0);

  BracketTable table(n, d);
  std::set<IndexTuple> seen;
  const auto& brackets = root.at("brackets");
  if (!brackets.is_array()) throw ParseError("brackets: expected an array");
  for (std::size_t k = 0; k < brackets.size(); ++k) {
    std::string where = "brackets[" + std::to_string(k) + "]";
    const auto& entry = brackets[k];
    if (!entry.is_object()) throw ParseError(where + ": expected an object");
    detail::reject_unknown_keys(entry, {"args", "value"}, where);
    if (!entry.contains("args") || !entry.contains("value"))
      throw ParseError(where + ": \"args\" and \"value\" are required");
    const auto& args = entry.at("args");
    if (!args.is_array() || args.size() != static_cast<std::size_t>(n))
      throw ParseError(where + ".args: expected an array of " + std::to_string(n) + " indices");
    IndexTuple t;
    for (const auto& a : args) t.push_back(detail::parse_positive_int(a, where + ".args", 1));
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] > d) throw ParseError(where + ".args: index out of range");
      if (i > 0 && t[i] <= t[i - 1])
        throw ParseError(where + ".args: indices must be strictly increasing");
    }
    if (!seen.insert(t).second) throw ParseError(where + ".args: duplicate bracket tuple");
    const auto& value = entry.at("value");
    if (!value.is_object()) throw ParseError(where + ".value: expected an object");
    Vector v(d);
    for (auto it = value.begin(); it != value.end(); ++it) {
      int idx;
      try {
        std::size_t pos = 0;
        idx = std::stoi(it.key(), &pos);
        if (pos != it.key().size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError(where + ".value: key \"" + it.key() + "\" is not a basis index");
      }
      if (idx < 1 || idx > d) throw ParseError(where + ".value: basis index out of range");
      v[idx - 1] = detail::parse_rational_field(it.value(), where + ".value." + it.key());
    }
    table.set(t, std::move(v));
  }

  std::optional<SymForm> form;
  if (root.contains("gram")) {
    const auto& g = root.at("gram");
    if (!g.is_array() || g.size() != static_cast<std::size_t>(d))
      throw ParseError("gram: expected a " + std::to_string(d) + "-row matrix");
    Matrix gram(d, d);
    for (int i = 0; i < d; ++i) {
      const auto& row = g[i];
      if (!row.is_array() || row.size() != static_cast<std::size_t>(d))
        throw ParseError("gram[" + std::to_string(i) + "]: expected " + std::to_string(d) +
                         " entries");
      for (int j = 0; j < d; ++j)
        gram.at(i, j) = detail::parse_rational_field(
            row[j], "gram[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
    if (!gram.is_symmetric()) throw ParseError("gram: matrix is not symmetric");
    form = SymForm{std::move(gram)};
  }
  return {NLieAlgebra{std::move(table)}, std::move(form)};
}

inline AlgebraFile parse_algebra_text(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return parse_algebra_json(root);
}

inline nlohmann::json algebra_to_json(const NLieAlgebra& a, const SymForm* form = nullptr) {
  nlohmann::json root;
  root["arity"] = a.arity();
  root["dim"] = a.dim();
  nlohmann::json brackets = nlohmann::json::array();
  for (std::size_t r : a.table().nonzero_ranks()) {
    nlohmann::json entry;
    entry["args"] = a.table().tuple_of_rank(r);
    nlohmann::json value;
    const Vector& v = *a.table().get_by_rank(r);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!is_zero(v[i])) value[std::to_string(i + 1)] = to_string(v[i]);
    entry["value"] = std::move(value);
    brackets.push_back(std::move(entry));
  }
  root["brackets"] = std::move(brackets);
  if (form) {
    nlohmann::json g = nlohmann::json::array();
    for (std::size_t i = 0; i < form->dim(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < form->dim(); ++j)
        row.push_back(to_string(form->gram().at(i, j)));
      g.push_back(std::move(row));
    }
    root["gram"] = std::move(g);
  }
  return root;
}

}  // namespace nlie
