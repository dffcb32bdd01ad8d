#ifndef NILORBIT_JSON_HPP
#define NILORBIT_JSON_HPP

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "nilorbit/arthur.hpp"
#include "nilorbit/group.hpp"
#include "nilorbit/oracle.hpp"
#include "nilorbit/partition.hpp"

namespace nilorbit {

using json = nlohmann::json;

// Partition <-> [3, 3, 2]

inline void to_json(json& j, const Partition& p) { j = p.vec(); }

inline void from_json(const json& j, Partition& p) {
  if (!j.is_array()) throw InvalidPartition("a partition must be a JSON array of integers");
  std::vector<int> raw;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidPartition("partition entries must be integers");
    raw.push_back(x.get<int>());
  }
  p = Partition(std::move(raw));
}

// GroupType <-> "Sp:8"

inline void to_json(json& j, const GroupType& g) { j = to_tag(g); }

inline void from_json(const json& j, GroupType& g) {
  if (!j.is_string()) throw UsageError("a group must be a tag string such as \"Sp:8\"");
  g = parse_group_tag(j.get<std::string>());
}

inline void to_json(json& j, const SimpleFactor& f) {
  j = json{{"label", f.label}, {"a", f.a}, {"b", f.b}, {"symmetry", std::string(to_string(f.tau_symmetry))}};
}

inline void from_json(const json& j, SimpleFactor& f) {
  try {
    f.label = j.at("label").get<std::string>();
    f.a = j.at("a").get<int>();
    f.b = j.at("b").get<int>();
    f.tau_symmetry = parse_symmetry(j.at("symmetry").get<std::string>());
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed factor: ") + e.what());
  }
}

inline void to_json(json& j, const ArthurParameter& psi) {
  j = json{{"group", psi.group}, {"factors", psi.factors}};
}

inline void from_json(const json& j, ArthurParameter& psi) {
  if (!j.is_object() || !j.contains("group") || !j.contains("factors") || !j.at("factors").is_array()) {
    throw UsageError("a parameter needs \"group\" and a \"factors\" array");
  }
  psi.group = j.at("group").get<GroupType>();
  psi.factors = j.at("factors").get<std::vector<SimpleFactor>>();
}

inline void to_json(json& j, const Counterexample& c) {
  j = json{{"target", c.target},
           {"group", c.group},
           {"input", c.input},
           {"fast_result", c.fast_result},
           {"oracle_result", c.oracle_result}};
}

inline void from_json(const json& j, Counterexample& c) {
  c.target = j.at("target").get<std::string>();
  c.group = j.at("group").get<GroupType>();
  c.input = j.at("input").get<Partition>();
  c.fast_result = j.at("fast_result").get<std::vector<Partition>>();
  c.oracle_result = j.at("oracle_result").get<std::vector<Partition>>();
}

inline void to_json(json& j, const UniquenessFailure& u) {
  j = json{{"target", u.target}, {"group", u.group}, {"input", u.input}, {"extrema", u.extrema}};
}

inline void from_json(const json& j, UniquenessFailure& u) {
  u.target = j.at("target").get<std::string>();
  u.group = j.at("group").get<GroupType>();
  u.input = j.at("input").get<Partition>();
  u.extrema = j.at("extrema").get<std::vector<Partition>>();
}

inline void to_json(json& j, const OracleReport& r) {
  j = json{{"target", r.target},
           {"sizes_checked", r.sizes_checked},
           {"agree", r.agree},
           {"counterexamples", r.counterexamples},
           {"uniqueness_failures", r.uniqueness_failures}};
}

inline void from_json(const json& j, OracleReport& r) {
  r.target = j.at("target").get<std::string>();
  r.sizes_checked = j.at("sizes_checked").get<std::vector<int>>();
  r.agree = j.at("agree").get<bool>();
  r.counterexamples = j.at("counterexamples").get<std::vector<Counterexample>>();
  r.uniqueness_failures = j.at("uniqueness_failures").get<std::vector<UniquenessFailure>>();
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline SimpleFactor parse_factor(std::string_view text) {
  text = trim(text);
  auto colon = text.find(':');
  if (colon == std::string_view::npos || trim(text.substr(0, colon)).empty()) {
    throw UsageError("factor '" + std::string(text) + "' should look like label:a=3,orth,b=3");
  }
  SimpleFactor f;
  f.label = std::string(trim(text.substr(0, colon)));
  bool have_a = false, have_b = false, have_sym = false;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    auto comma = rest.find(',');
    std::string_view item = trim(rest.substr(0, comma));
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      f.tau_symmetry = parse_symmetry(item);
      have_sym = true;
    } else {
      std::string_view key = trim(item.substr(0, eq));
      std::string_view value = trim(item.substr(eq + 1));
      if (key == "a") {
        f.a = detail::parse_int(value, text);
        have_a = true;
      } else if (key == "b") {
        f.b = detail::parse_int(value, text);
        have_b = true;
      } else if (key == "sym" || key == "symmetry") {
        f.tau_symmetry = parse_symmetry(value);
        have_sym = true;
      } else {
        throw UsageError("unknown key '" + std::string(key) + "' in factor '" + std::string(text) + "'");
      }
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (!have_a || !have_b || !have_sym) {
    throw UsageError("factor '" + std::string(text) + "' needs a=, b= and a symmetry");
  }
  return f;
}

}  // namespace detail

/// Inline grammar: `tau:a=3,orth,b=3 + tau2:a=2,sympl,b=1`.
inline ArthurParameter parse_parameter_inline(const GroupType& group, std::string_view text) {
  ArthurParameter psi{group, {}};
  while (true) {
    auto plus = text.find('+');
    psi.factors.push_back(detail::parse_factor(text.substr(0, plus)));
    if (plus == std::string_view::npos) break;
    text.remove_prefix(plus + 1);
  }
  return psi;
}

inline std::string to_inline(const ArthurParameter& psi) {
  std::string out;
  for (std::size_t i = 0; i < psi.factors.size(); ++i) {
    const auto& f = psi.factors[i];
    if (i) out += " + ";
    out += f.label + ":a=" + std::to_string(f.a) + "," +
           (f.tau_symmetry == Symmetry::orthogonal ? "orth" : "sympl") + ",b=" + std::to_string(f.b);
  }
  return out;
}

}  // namespace nilorbit

#endif  // NILORBIT_JSON_HPP
