// Acceptance suite: one PASS/FAIL line per criterion. Reference values are
// rebuilt here from closed forms, not taken from the library's own tables.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nilorbit/cli.hpp"

using namespace nilorbit;

namespace {

using Clock = std::chrono::steady_clock;
using PartitionSet = std::set<Partition, PartitionOrder>;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    o.pass = false;
    o.detail += "; exceeded " + std::to_string(limit_seconds) + " s";
  }
  if (!o.pass) ++failures;
  std::printf("%s %2d %-34s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), secs, o.detail.c_str());
  std::fflush(stdout);
}

Partition parts(std::initializer_list<std::pair<int, int>> blocks) {
  std::vector<int> raw;
  for (auto [value, count] : blocks) {
    for (int i = 0; i < count; ++i) raw.push_back(value);
  }
  return Partition(std::move(raw));
}

std::string mismatch(const std::string& what, const Partition& got, const Partition& want) {
  return what + ": got [" + to_string(got) + "] want [" + to_string(want) + "]";
}

Outcome tally(int checked, const std::vector<std::string>& errors) {
  Outcome o;
  o.pass = errors.empty();
  o.detail = std::to_string(checked) + " cases, " + std::to_string(errors.size()) + " mismatches";
  if (!errors.empty()) o.detail += "; first " + errors.front();
  return o;
}

// Simple parameters (tau, b), dim tau = a.
Outcome simple_types() {
  int checked = 0;
  std::vector<std::string> errors;
  const Symmetry orth = Symmetry::orthogonal, sympl = Symmetry::symplectic;
  for (int a = 1; a <= 24; ++a) {
    for (int b = 1; a * b <= 24; ++b) {
      const int n = a * b;
      // Sp(2n): dual group SO(2n+1), everything orthogonal, a and b odd.
      if (a % 2 == 1 && b % 2 == 1) {
        ArthurParameter psi{GroupType::sp((n - 1) / 2), {{"tau", a, b, orth}}};
        Partition want = parts({{a, b - 1}, {a - 1, 1}});
        ++checked;
        if (fourier_bound(psi) != want) errors.push_back(mismatch(to_tag(psi.group), fourier_bound(psi), want));
      }
      // SO(2n+1): dual group Sp(2n); tau symplectic for odd b.
      if (n % 2 == 0 && (b % 2 == 0 || a % 2 == 0)) {
        ArthurParameter psi{GroupType::so_odd(n / 2), {{"tau", a, b, b % 2 == 1 ? sympl : orth}}};
        Partition want;
        if (b % 2 == 1) {
          want = parts({{a + 1, 1}, {a, b - 1}});
        } else if (a % 2 == 1) {
          want = parts({{a, b}, {1, 1}});
        } else {
          want = parts({{a + 1, 1}, {a, b - 2}, {a - 1, 1}, {1, 1}});
        }
        ++checked;
        if (fourier_bound(psi) != want) errors.push_back(mismatch(to_tag(psi.group), fourier_bound(psi), want));
      }
      // SO(2n): dual group SO(2n); tau symplectic for even b.
      if (n % 2 == 0 && (b % 2 == 1 || a % 2 == 0)) {
        ArthurParameter psi{GroupType::so_even(n / 2), {{"tau", a, b, b % 2 == 1 ? orth : sympl}}};
        Partition want = b % 2 == 0 ? parts({{a, b}}) : parts({{a, b - 1}, {a - 1, 1}, {1, 1}});
        ++checked;
        if (fourier_bound(psi) != want) errors.push_back(mismatch(to_tag(psi.group), fourier_bound(psi), want));
      }
    }
  }
  return tally(checked, errors);
}

Outcome case_I() {
  int checked = 0;
  std::vector<std::string> errors;
  for (int a = 1; 2 * a <= 30; ++a) {
    for (int b = 1; 2 * a * b <= 30; ++b) {
      for (int m = 0; 2 * a * b + 2 * m <= 30; ++m) {
        if (a > 2 * m + 1) continue;
        ArthurParameter psi{GroupType::sp(a * b + m), {{"tau", a, 2 * b + 1, Symmetry::orthogonal}}};
        if (a < 2 * m + 1) psi.factors.push_back({"sigma", 2 * m + 1 - a, 1, Symmetry::orthogonal});
        Partition want;
        if (a == 2 * m + 1) {
          want = parts({{a, 2 * b}, {2 * m, 1}});
        } else if (a % 2 == 0) {
          want = parts({{2 * m, 1}, {a, 2 * b}});
        } else {
          want = parts({{2 * m, 1}, {a + 1, 1}, {a, 2 * b - 2}, {a - 1, 1}});
        }
        ++checked;
        Partition got = fourier_bound(psi);
        if (got != want) errors.push_back(mismatch(to_inline(psi), got, want));
      }
    }
  }
  return tally(checked, errors);
}

Outcome case_III() {
  int checked = 0;
  std::vector<std::string> errors;
  for (int k = 1; 4 * k <= 30; ++k) {
    for (int b = 1; 4 * k * b <= 30; ++b) {
      for (int m = 0; 4 * k * b + 2 * m <= 30; ++m) {
        ArthurParameter psi{GroupType::sp(2 * k * b + m),
                            {{"tau", 2 * k, 2 * b, Symmetry::symplectic},
                             {"sigma", 2 * m + 1, 1, Symmetry::orthogonal}}};
        Partition want = parts({{2 * k + 2 * m, 1}, {2 * k, 2 * b - 1}});
        ++checked;
        Partition got = fourier_bound(psi);
        if (got != want) errors.push_back(mismatch(to_inline(psi), got, want));
      }
    }
  }
  return tally(checked, errors);
}

Outcome expansion_identity() {
  int checked = 0;
  std::vector<std::string> errors;
  for (int m = 1; 2 * m <= 30; ++m) {
    for (int a = 1; a <= 2 * m; a += 2) {
      for (int b = 1; 2 * m + 2 * a * b <= 30; ++b) {
        Partition p = parts({{2 * m, 1}, {a, 2 * b}});
        Partition want = parts({{2 * m, 1}, {a + 1, 1}, {a, 2 * b - 2}, {a - 1, 1}});
        ++checked;
        Partition got = special_expansion(p, GroupType::sp(p.total() / 2));
        if (got != want) errors.push_back(mismatch(to_string(p), got, want));
      }
    }
  }
  return tally(checked, errors);
}

// Every way of writing the dual dimension as a sum of generic factors
// (tau_i, 1) of the required symmetry.
Outcome generic_parameters() {
  int checked = 0;
  std::vector<std::string> errors;
  for (int dim = 1; dim <= 24; ++dim) {
    std::vector<GroupType> groups;
    if (dim % 2 == 1) {
      groups = {GroupType::sp(dim / 2)};
    } else {
      groups = {GroupType::so_odd(dim / 2), GroupType::so_even(dim / 2)};
    }
    for (const auto& g : groups) {
      const Symmetry required = g.kind == GroupKind::so_odd ? Symmetry::symplectic : Symmetry::orthogonal;
      const Partition want = g.kind == GroupKind::sp       ? Partition{dim - 1}
                             : g.kind == GroupKind::so_odd ? Partition{dim + 1}
                                                           : Partition{dim - 1, 1};
      for (const auto& split : enumerate_partitions(dim)) {
        if (required == Symmetry::symplectic && !std::all_of(split.begin(), split.end(), [](int x) {
              return x % 2 == 0;
            })) {
          continue;
        }
        ArthurParameter psi{g, {}};
        for (std::size_t i = 0; i < split.length(); ++i) {
          psi.factors.push_back({"tau" + std::to_string(i), split[i], 1, required});
        }
        ++checked;
        if (!is_generic(psi)) errors.push_back(to_inline(psi) + " not generic");
        Partition got = fourier_bound(psi);
        if (got != want) errors.push_back(mismatch(to_tag(g) + " " + to_inline(psi), got, want));
      }
    }
  }
  return tally(checked, errors);
}

Outcome nonsingular() {
  int checked = 0;
  std::vector<std::string> errors;
  for (int n = 1; n <= 12; ++n) {
    const int e = n / 2;
    struct Row {
      GroupType g;
      Partition ns;
      Partition bound;
    };
    std::vector<Row> rows;
    rows.push_back({GroupType::sp(n), parts({{2, n}}), parts({{2, n}})});
    if (n % 2 == 0) {
      rows.push_back({GroupType::so_odd(n), parts({{2, 2 * e}, {1, 1}}), parts({{3, 1}, {2, 2 * e - 2}, {1, 2}})});
      rows.push_back({GroupType::so_even(n), parts({{2, 2 * e}}), parts({{2, 2 * e}})});
    } else {
      // For n = 1 the non-singular partition [1^3] is already special.
      Partition bound = n == 1 ? parts({{1, 3}}) : parts({{3, 1}, {2, 2 * e - 2}, {1, 4}});
      rows.push_back({GroupType::so_odd(n), parts({{2, 2 * e}, {1, 3}}), bound});
      rows.push_back({GroupType::so_even(n), parts({{2, 2 * e}, {1, 2}}), parts({{2, 2 * e}, {1, 2}})});
    }
    for (const auto& row : rows) {
      ++checked;
      Partition ns = nonsingular_partition(row.g);
      if (ns != row.ns) errors.push_back(mismatch("p_ns " + to_tag(row.g), ns, row.ns));
      Partition bound = nonsingular_bound(row.g);
      if (bound != row.bound) errors.push_back(mismatch("bound " + to_tag(row.g), bound, row.bound));
      Partition expanded = special_expansion(row.ns, row.g);
      if (expanded != bound) errors.push_back(mismatch("expansion " + to_tag(row.g), expanded, bound));
    }
  }
  return tally(checked, errors);
}

Outcome oracle_equivalence() {
  OracleReport r = run_oracle_suite(16);
  std::size_t on_valid = 0;
  std::map<std::string, int> by_target;
  for (const auto& u : r.uniqueness_failures) {
    if (!satisfies_parity(u.input, parity_of(u.group))) continue;
    ++on_valid;
    ++by_target[u.target];
  }
  Outcome o;
  o.pass = r.counterexamples.empty() && on_valid == 0;
  o.detail = std::to_string(r.counterexamples.size()) + " counterexamples, " + std::to_string(on_valid) +
             " valid inputs with non-unique extrema";
  for (const auto& [target, count] : by_target) o.detail += " [" + target + ": " + std::to_string(count) + "]";
  if (on_valid) {
    for (const auto& u : r.uniqueness_failures) {
      if (!satisfies_parity(u.input, parity_of(u.group))) continue;
      o.detail += "; e.g. " + u.target + " " + to_tag(u.group) + " [" + to_string(u.input) + "] ->";
      for (const auto& x : u.extrema) o.detail += " [" + to_string(x) + "]";
      break;
    }
  }
  return o;
}

std::vector<GroupType> classical_groups_of_size(int size) {
  if (size % 2 == 1) return {GroupType::so_odd(size / 2)};
  return {GroupType::sp(size / 2), GroupType::so_even(size / 2)};
}

Outcome specialness_oracle() {
  int checked = 0;
  std::vector<std::string> errors;
  for (int size = 0; size <= 16; ++size) {
    auto all = enumerate_partitions(size);
    for (const auto& g : classical_groups_of_size(size)) {
      std::vector<Partition> valid;
      for (const auto& p : all) {
        if (is_valid(p, g)) valid.push_back(p);
      }
      PartitionSet image;
      for (const auto& q : valid) image.insert(ls_dual(q, g));
      for (const auto& p : valid) {
        ++checked;
        bool special = is_special(p, g);
        if (special != (image.count(p) > 0)) errors.push_back("is_special " + to_tag(g) + " [" + to_string(p) + "]");
        if (size <= 14 && (ls_dual(ls_dual(p, g), g) == p) != special) {
          errors.push_back("ls_dual twice " + to_tag(g) + " [" + to_string(p) + "]");
        }
      }
    }
  }
  return tally(checked, errors);
}

Outcome duality_properties() {
  int checked = 0;
  std::vector<std::string> errors;
  for (int dim = 0; dim <= 14; ++dim) {
    std::vector<GroupType> groups;
    if (dim % 2 == 1) {
      groups = {GroupType::sp(dim / 2)};
    } else {
      groups = {GroupType::so_odd(dim / 2), GroupType::so_even(dim / 2)};
    }
    auto all = enumerate_partitions(dim);
    for (const auto& g : groups) {
      // Dual sides: Sp <- orthogonal, SO(2n+1) <- symplectic, SO(2n) <- orthogonal.
      Parity want_parity = g.kind == GroupKind::so_odd ? Parity::symplectic : Parity::orthogonal;
      std::vector<std::pair<Partition, Partition>> io;
      for (const auto& q : all) {
        if (!satisfies_parity(q, want_parity)) continue;
        Partition out = bv_dual(q, g);
        ++checked;
        if (!is_valid(out, g) || !is_special(out, g)) {
          errors.push_back("not special " + to_tag(g) + " [" + to_string(q) + "] -> [" + to_string(out) + "]");
        }
        io.emplace_back(q, out);
      }
      for (const auto& [p, dp] : io) {
        for (const auto& [q, dq] : io) {
          if (dominance_leq(p, q) && !dominance_leq(dq, dp)) {
            errors.push_back("order " + to_tag(g) + " [" + to_string(p) + "] <= [" + to_string(q) + "]");
          }
        }
      }
    }
  }
  for (int size = 0; size <= 13; ++size) {
    for (const auto& q : enumerate_partitions(size)) {
      std::vector<std::pair<GroupType, GroupType>> legs;
      if (size % 2 == 1) {
        legs = {{GroupType::so_odd(size / 2), GroupType::sp(size / 2)}};
      } else {
        legs = {{GroupType::sp(size / 2), GroupType::so_odd(size / 2)},
                {GroupType::so_even(size / 2), GroupType::so_even(size / 2)}};
      }
      for (const auto& [home, across] : legs) {
        if (!is_valid(q, home) || !is_special(q, home)) continue;
        ++checked;
        Partition back = bv_dual(bv_dual(q, across), home);
        if (back != q) errors.push_back(mismatch("round trip " + to_tag(home), back, q));
      }
    }
  }
  return tally(checked, errors);
}

struct CliCase {
  std::vector<std::string> args;
  int exit_code;
  std::optional<std::string> out;  // unset: stdout not pinned
};

Outcome cli_conformance() {
  const std::string chain =
      "digraph dominance {\n"
      "  n0 [label=\"4\", shape=box];\n"
      "  n1 [label=\"2,2\", shape=box];\n"
      "  n2 [label=\"2,1,1\"];\n"
      "  n3 [label=\"1,1,1,1\", shape=box];\n"
      "  n0 -> n1;\n"
      "  n1 -> n2;\n"
      "  n2 -> n3;\n"
      "}\n";
  const std::string highlighted =
      "digraph dominance {\n"
      "  n0 [label=\"4\", shape=box, peripheries=2, style=filled];\n"
      "  n1 [label=\"2,2\", shape=box, style=filled];\n"
      "  n2 [label=\"2,1,1\", style=filled];\n"
      "  n3 [label=\"1,1,1,1\", shape=box, style=filled];\n"
      "  n0 -> n1;\n"
      "  n1 -> n2;\n"
      "  n2 -> n3;\n"
      "}\n";
  std::vector<CliCase> cases{
      {{"dual", "--group", "Sp:8", "3,3,3"}, 0, "3,3,2\n"},
      {{"partition", "collapse", "--group", "Sp:4", "3,1"}, 0, "2,2\n"},
      {{"dual", "--group", "Sp:8", "3,2,2,2"}, 2, ""},
      {{"enumerate", "--group", "Sp:4", "--filter", "valid"}, 0, "4 partitions\n4; 2,2; 2,1,1; 1,1,1,1\n"},
      {{"enumerate", "--group", "Sp:4", "--filter", "special"}, 0, "3 partitions\n4; 2,2; 1,1,1,1\n"},
      {{"enumerate", "--group", "A:3", "--filter", "valid"}, 0, "3 partitions\n3; 2,1; 1,1,1\n"},
      {{"enumerate", "--group", "A:41"}, 1, ""},
      {{"poset", "--group", "Sp:4"}, 0, chain},
      {{"poset", "--group", "Sp:4", "--highlight", "g:a=5,orth,b=1"}, 0, highlighted},
      {{"poset", "--group", "Sp:0"}, 0, "digraph dominance {\n  n0 [label=\"\", shape=box];\n}\n"},
      {{"poset", "--group", "Sp:4", "--highlight", "g:a=7,orth,b=1"}, 2, ""},
      {{"selfcheck", "--max", "0"}, 0, std::nullopt},
      {{"selfcheck", "--max", "12"}, 0, std::nullopt},
  };

  std::vector<std::string> errors;
  int checked = 0;
  for (const auto& c : cases) {
    ++checked;
    cli::Result r = cli::run(c.args);
    std::string shown;
    for (const auto& a : c.args) shown += (shown.empty() ? "" : " ") + a;
    if (r.exit_code != c.exit_code) {
      errors.push_back("`" + shown + "` exit " + std::to_string(r.exit_code) + " want " + std::to_string(c.exit_code));
    } else if (c.out && r.out != *c.out) {
      errors.push_back("`" + shown + "` stdout differs");
    }
  }

  ++checked;
  cli::RunOptions mutated;
  mutated.special_override = [](const Partition& p, const GroupType& g) {
    if (g.kind != GroupKind::sp) return is_special(p, g);
    return satisfies_parity(transpose(p), Parity::orthogonal);
  };
  cli::Result m = cli::run({"selfcheck", "--max", "4"}, mutated);
  if (m.exit_code != 3 || json::parse(m.out)["counterexamples"].empty()) {
    errors.push_back("corrupted specialness not detected");
  }

  ++checked;
  auto start = Clock::now();
  cli::Result full = cli::run({"selfcheck", "--max", "14"});
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (full.exit_code != 0) {
    json report = json::parse(full.out);
    errors.push_back("`selfcheck --max 14` exit " + std::to_string(full.exit_code) + " with " +
                     std::to_string(report["counterexamples"].size()) + " counterexamples and " +
                     std::to_string(report["uniqueness_failures"].size()) + " non-unique extrema");
  }
  if (secs >= 30) errors.push_back("`selfcheck --max 14` took " + std::to_string(secs) + " s");

  Outcome o;
  o.pass = errors.empty();
  o.detail = std::to_string(checked) + " invocations, " + std::to_string(errors.size()) + " failing";
  for (const auto& e : errors) o.detail += "; " + e;
  return o;
}

}  // namespace

int main() {
  criterion(1, "simple-type dual tables", 1.0, simple_types);
  criterion(2, "odd-a symplectic family", 1.0, case_I);
  criterion(3, "even-b symplectic family", 0, case_III);
  criterion(4, "symplectic expansion identity", 0, expansion_identity);
  criterion(5, "generic parameters give principal", 0, generic_parameters);
  criterion(6, "non-singular bounds", 0, nonsingular);
  criterion(7, "fast routines vs brute force <= 16", 10.0, oracle_equivalence);
  criterion(8, "specialness oracle", 0, specialness_oracle);
  criterion(9, "duality properties", 0, duality_properties);
  criterion(10, "CLI conformance", 0, cli_conformance);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
