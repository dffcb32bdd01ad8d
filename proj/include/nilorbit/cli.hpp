#ifndef NILORBIT_CLI_HPP
#define NILORBIT_CLI_HPP

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nilorbit/arthur.hpp"
#include "nilorbit/collapse.hpp"
#include "nilorbit/dot.hpp"
#include "nilorbit/duality.hpp"
#include "nilorbit/json.hpp"
#include "nilorbit/oracle.hpp"
#include "nilorbit/partition.hpp"
#include "nilorbit/selfcheck.hpp"

namespace nilorbit::cli {

enum ExitCode : int { ok = 0, usage = 1, bad_input = 2, invariant = 3 };

struct Result {
  int exit_code = ExitCode::ok;
  std::string out;
  std::string err;
};

/// Hooks for tests: replaces the specialness predicate seen by the
/// brute-force side of `selfcheck`.
struct RunOptions {
  std::optional<SpecialnessFn> special_override;
};

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage:
    case ErrorKind::cap: return ExitCode::usage;
    case ErrorKind::size:
    case ErrorKind::parity:
    case ErrorKind::parameter: return ExitCode::bad_input;
    case ErrorKind::invariant: return ExitCode::invariant;
  }
  return ExitCode::invariant;
}

namespace detail {

inline std::string bool_text(bool b) { return b ? "true" : "false"; }

inline std::string line(const std::string& s) { return s + "\n"; }

inline std::string ordering_text(std::strong_ordering c) {
  if (c < 0) return "less";
  if (c > 0) return "greater";
  return "equal";
}

struct Args {
  bool json = false;
  int cap = kDefaultEnumerationCap;
  std::string group_tag;
  // partition
  std::string op;
  std::vector<std::string> operands;
  // dual
  std::string dual_input;
  // arthur
  std::string parameter_text;
  std::string parameter_file;
  std::string check_text;
  std::string order = "dominance";
  // enumerate
  std::string filter = "all";
  // poset
  std::string highlight;
  // selfcheck
  int max_size = 14;
};

inline GroupType require_group(const Args& a) {
  if (a.group_tag.empty()) throw UsageError("--group is required");
  return parse_group_tag(a.group_tag);
}

inline ArthurParameter load_parameter(const Args& a, const GroupType* group) {
  if (!a.parameter_file.empty()) {
    std::ifstream in(a.parameter_file);
    if (!in) throw UsageError("cannot open parameter file '" + a.parameter_file + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw UsageError(std::string("parameter file is not JSON: ") + e.what());
    }
    ArthurParameter psi = j.get<ArthurParameter>();
    if (group && *group != psi.group) {
      throw UsageError("--group " + to_tag(*group) + " disagrees with the file's group " + to_tag(psi.group));
    }
    return psi;
  }
  if (a.parameter_text.empty()) throw UsageError("an Arthur parameter is required (inline or --file)");
  if (!group) throw UsageError("--group is required with an inline parameter");
  return parse_parameter_inline(*group, a.parameter_text);
}

inline Result run_partition(const Args& a) {
  const std::string& op = a.op;
  auto operand = [&](std::size_t i) {
    if (a.operands.size() <= i) throw UsageError("partition " + op + " needs more operands");
    return parse_partition(a.operands[i]);
  };
  std::size_t expected_operands = (op == "leq" || op == "lex") ? 2 : 1;
  if (a.operands.size() != expected_operands) {
    throw UsageError("partition " + op + " takes " + std::to_string(expected_operands) + " partition(s)");
  }
  Partition p = operand(0);
  json j{{"op", op}, {"input", p}};
  std::string text;
  auto set_partition = [&](const Partition& r) {
    j["result"] = r;
    text = to_string(r);
  };
  auto set_bool = [&](bool b) {
    j["result"] = b;
    text = bool_text(b);
  };
  auto group = [&] {
    GroupType g = require_group(a);
    j["group"] = g;
    return g;
  };

  if (op == "normalize") {
    set_partition(p);
  } else if (op == "transpose") {
    set_partition(transpose(p));
  } else if (op == "valid") {
    set_bool(is_valid(p, group()));
  } else if (op == "special") {
    set_bool(is_special(p, group()));
  } else if (op == "mp-special") {
    set_bool(is_metaplectic_special(p));
  } else if (op == "collapse") {
    set_partition(parity_collapse(p, group()));
  } else if (op == "special-collapse") {
    set_partition(special_collapse(p, group()));
  } else if (op == "expand") {
    set_partition(special_expansion(p, group()));
  } else if (op == "mp-expand") {
    set_partition(metaplectic_expansion(p));
  } else if (op == "ls-dual") {
    set_partition(ls_dual(p, group()));
  } else if (op == "leq") {
    Partition q = operand(1);
    j["other"] = q;
    set_bool(dominance_leq(p, q));
  } else if (op == "lex") {
    Partition q = operand(1);
    j["other"] = q;
    j["result"] = text = ordering_text(lex_cmp(p, q));
  } else {
    throw UsageError("unknown partition operation '" + op + "'");
  }
  return {ExitCode::ok, a.json ? line(j.dump()) : line(text), ""};
}

inline Result run_dual(const Args& a) {
  GroupType g = require_group(a);
  DualityTrace t = bv_dual_trace(parse_partition(a.dual_input), g);
  if (!a.json) return {ExitCode::ok, line(to_string(t.result)), ""};
  json recipe{{"size_adjust", std::string(to_string(t.recipe.size_adjust))},
              {"collapse_type", t.recipe.collapse_type ? json(*t.recipe.collapse_type) : json(nullptr)},
              {"transpose_position", std::string(to_string(t.recipe.transpose_position))}};
  json j{{"group", g},
         {"input", t.input},
         {"recipe", recipe},
         {"trace", {{"size_adjusted", t.size_adjusted}, {"collapsed", t.collapsed}, {"final", t.result}}},
         {"output", t.result}};
  return {ExitCode::ok, line(j.dump()), ""};
}

inline Result run_arthur(const Args& a) {
  std::optional<GroupType> g;
  if (!a.group_tag.empty()) g = parse_group_tag(a.group_tag);
  ArthurParameter psi = load_parameter(a, g ? &*g : nullptr);
  Partition p = partition_of(psi);
  Partition bound = fourier_bound(psi);
  std::optional<Relation> relation;
  if (!a.check_text.empty()) {
    BoundOrder order;
    if (a.order == "dominance") {
      order = BoundOrder::dominance;
    } else if (a.order == "lex" || a.order == "lexicographic") {
      order = BoundOrder::lexicographic;
    } else {
      throw UsageError("--order must be dominance or lex");
    }
    relation = check_bound(parse_partition(a.check_text), psi, order);
  }
  if (a.json) {
    json j{{"parameter", psi}, {"partition", p}, {"generic", is_generic(psi)}, {"bound", bound}};
    if (relation) {
      j["check"] = {{"partition", parse_partition(a.check_text)},
                    {"order", a.order == "dominance" ? "dominance" : "lexicographic"},
                    {"relation", std::string(to_string(*relation))}};
    }
    return {ExitCode::ok, line(j.dump()), ""};
  }
  if (relation) return {ExitCode::ok, line(std::string(to_string(*relation))), ""};
  return {ExitCode::ok, line(to_string(bound)), ""};
}

inline bool passes_filter(const Partition& p, const GroupType& g, const std::string& filter) {
  if (filter == "all") return true;
  if (!satisfies_parity(p, parity_of(g))) return false;
  if (filter == "valid") return true;
  if (filter == "special") return is_special(p, g);
  if (filter == "metaplectic_special") return is_metaplectic_special(p);
  throw UsageError("--filter must be all, valid, special or metaplectic_special");
}

inline Result run_enumerate(const Args& a) {
  GroupType g = require_group(a);
  if (a.filter == "metaplectic_special" && parity_of(g) != Parity::symplectic) {
    throw UsageError("the metaplectic_special filter needs an Sp or Mp group");
  }
  std::vector<Partition> listed;
  for (auto& p : enumerate_partitions(g.partition_size(), a.cap)) {
    if (passes_filter(p, g, a.filter)) listed.push_back(std::move(p));
  }
  if (a.json) {
    json j{{"group", g}, {"filter", a.filter}, {"count", listed.size()}, {"partitions", listed}};
    return {ExitCode::ok, line(j.dump()), ""};
  }
  std::string out = std::to_string(listed.size()) + (listed.size() == 1 ? " partition\n" : " partitions\n");
  for (std::size_t i = 0; i < listed.size(); ++i) {
    if (i) out += "; ";
    out += to_string(listed[i]);
  }
  return {ExitCode::ok, out + "\n", ""};
}

inline Result run_poset(const Args& a) {
  GroupType g = require_group(a);
  std::vector<Partition> nodes;
  for (auto& p : enumerate_partitions(g.partition_size(), a.cap)) {
    if (satisfies_parity(p, parity_of(g))) nodes.push_back(std::move(p));
  }
  HasseStyle style;
  for (const auto& p : nodes) style.special.push_back(is_special(p, g));
  if (!a.highlight.empty()) {
    ArthurParameter psi = parse_parameter_inline(g, a.highlight);
    style.bound = fourier_bound(psi);
  }
  return {ExitCode::ok, hasse_dot(nodes, style), ""};
}

inline Result run_selfcheck_cmd(const Args& a, const RunOptions& options) {
  OracleOptions oracle;
  oracle.cap = a.cap;
  if (options.special_override) oracle.special = *options.special_override;
  OracleReport report = run_selfcheck(a.max_size, oracle);
  return {report.agree ? ExitCode::ok : ExitCode::invariant, line(json(report).dump(2)), ""};
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name. Never throws.
inline Result run(const std::vector<std::string>& args, const RunOptions& options = {}) {
  detail::Args a;
  CLI::App app{"Partition calculus for nilpotent orbits of classical groups", "nilorbit"};
  app.require_subcommand(1, 1);
  app.add_flag("--json", a.json, "Emit JSON instead of text");
  app.add_option("--cap", a.cap, "Largest total that may be enumerated")->capture_default_str();

  auto* partition = app.add_subcommand("partition", "Single-partition operations");
  partition->add_option("op", a.op, "normalize|transpose|valid|special|mp-special|collapse|special-collapse|"
                                   "expand|mp-expand|ls-dual|leq|lex")
      ->required();
  partition->add_option("partitions", a.operands, "Partition(s) in comma form, e.g. 3^2,1")->required();
  partition->add_option("--group", a.group_tag, "Group tag such as Sp:8");

  auto* dual = app.add_subcommand("dual", "Barbasch-Vogan dual of a dual-group partition");
  dual->add_option("--group", a.group_tag, "Target group tag")->required();
  dual->add_option("partition", a.dual_input, "Dual-side partition")->required();

  auto* arthur = app.add_subcommand("arthur", "Partition and Fourier bound of an Arthur parameter");
  arthur->add_option("--group", a.group_tag, "Group tag");
  arthur->add_option("parameter", a.parameter_text, "Inline parameter, e.g. 'tau:a=3,orth,b=3 + s:a=1,orth,b=1'");
  arthur->add_option("--file", a.parameter_file, "JSON parameter file");
  arthur->add_option("--check", a.check_text, "Compare this partition with the bound");
  arthur->add_option("--order", a.order, "dominance or lex")->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "List partitions of the group's size");
  enumerate->add_option("--group", a.group_tag, "Group tag")->required();
  enumerate->add_option("--filter", a.filter, "all|valid|special|metaplectic_special")->capture_default_str();

  auto* poset = app.add_subcommand("poset", "Hasse diagram of valid partitions in DOT");
  poset->add_option("--group", a.group_tag, "Group tag")->required();
  poset->add_option("--highlight", a.highlight, "Inline Arthur parameter whose bound is highlighted");

  auto* selfcheck = app.add_subcommand("selfcheck", "Exhaustive oracle comparison and golden tables");
  selfcheck->add_option("--max", a.max_size, "Largest total checked")->capture_default_str();

  for (auto* sub : {partition, dual, arthur, enumerate, poset, selfcheck}) {
    sub->add_flag("--json", a.json, "Emit JSON instead of text");
    sub->add_option("--cap", a.cap, "Largest total that may be enumerated");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {ExitCode::ok, app.help(), ""};
  } catch (const CLI::CallForAllHelp&) {
    return {ExitCode::ok, app.help("", CLI::AppFormatMode::All), ""};
  } catch (const CLI::ParseError& e) {
    return {ExitCode::usage, "", "error[usage] " + std::string(e.what()) + "\n"};
  }

  try {
    if (*partition) return detail::run_partition(a);
    if (*dual) return detail::run_dual(a);
    if (*arthur) return detail::run_arthur(a);
    if (*enumerate) return detail::run_enumerate(a);
    if (*poset) return detail::run_poset(a);
    return detail::run_selfcheck_cmd(a, options);
  } catch (const Error& e) {
    return {exit_code_for(e.kind()), "", "error[" + std::string(to_string(e.kind())) + "] " + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {ExitCode::invariant, "", std::string("error[invariant] unexpected failure: ") + e.what() + "\n"};
  }
}

}  // namespace nilorbit::cli

#endif  // NILORBIT_CLI_HPP
