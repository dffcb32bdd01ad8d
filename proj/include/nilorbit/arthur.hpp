#ifndef NILORBIT_ARTHUR_HPP
#define NILORBIT_ARTHUR_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilorbit/collapse.hpp"
#include "nilorbit/duality.hpp"
#include "nilorbit/group.hpp"
#include "nilorbit/partition.hpp"

namespace nilorbit {

enum class Symmetry { orthogonal, symplectic };

inline Symmetry opposite(Symmetry s) {
  return s == Symmetry::orthogonal ? Symmetry::symplectic : Symmetry::orthogonal;
}

inline std::string_view to_string(Symmetry s) {
  return s == Symmetry::orthogonal ? "orthogonal" : "symplectic";
}

/// Accepts `orth`/`orthogonal` and `sympl`/`symp`/`symplectic`.
inline Symmetry parse_symmetry(std::string_view s) {
  if (s == "orth" || s == "orthogonal") return Symmetry::orthogonal;
  if (s == "sympl" || s == "symp" || s == "symplectic") return Symmetry::symplectic;
  throw UsageError("unknown symmetry '" + std::string(s) + "' (expected orth or sympl)");
}

/// One summand (tau, b) of an Arthur parameter. `label` stands in for the
/// cuspidal representation tau of GL(a).
struct SimpleFactor {
  std::string label;
  int a = 1;
  int b = 1;
  Symmetry tau_symmetry = Symmetry::orthogonal;

  /// Symmetry of tau tensored with the b-dimensional representation of SL2.
  Symmetry factor_type() const { return b % 2 == 1 ? tau_symmetry : opposite(tau_symmetry); }

  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

struct ArthurParameter {
  GroupType group;
  std::vector<SimpleFactor> factors;

  friend bool operator==(const ArthurParameter&, const ArthurParameter&) = default;
};

struct Violation {
  std::optional<std::size_t> factor;  // index into factors, if one is at fault
  std::string rule;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Symmetry every factor must have for the dual group of g.
inline Symmetry required_factor_type(const GroupType& g) {
  switch (g.kind) {
    case GroupKind::sp: return Symmetry::orthogonal;      // SO(2n+1, C)
    case GroupKind::so_odd: return Symmetry::symplectic;  // Sp(2n, C)
    case GroupKind::so_even: return Symmetry::orthogonal;  // SO(2n, C)
    default: break;
  }
  throw InvalidParameter("Arthur parameters are modelled only for Sp, SOodd and SOeven, not " + to_tag(g));
}

/// Every structural rule the parameter breaks; empty means valid.
inline std::vector<Violation> validate_parameter(const ArthurParameter& psi) {
  std::vector<Violation> out;
  const GroupType& g = psi.group;
  if (g.kind != GroupKind::sp && g.kind != GroupKind::so_odd && g.kind != GroupKind::so_even) {
    out.push_back({std::nullopt, "group", "parameters are modelled only for Sp, SOodd and SOeven, not " + to_tag(g)});
    return out;
  }
  if (psi.factors.empty()) {
    out.push_back({std::nullopt, "nonempty", "a parameter needs at least one factor"});
    return out;
  }
  const Symmetry required = required_factor_type(g);
  long long dimension = 0;
  std::set<std::pair<std::string, int>> seen;
  for (std::size_t i = 0; i < psi.factors.size(); ++i) {
    const SimpleFactor& f = psi.factors[i];
    const std::string name = "factor " + std::to_string(i) + " (" + f.label + ")";
    if (f.a < 1 || f.b < 1) {
      out.push_back({i, "positive", name + ": a and b must be positive"});
      continue;
    }
    dimension += static_cast<long long>(f.a) * f.b;
    if (!seen.insert({f.label, f.b}).second) {
      out.push_back({i, "distinct", name + ": (" + f.label + ", " + std::to_string(f.b) + ") occurs twice"});
    }
    if (f.factor_type() != required) {
      out.push_back({i, "symmetry", name + ": factor type " + std::string(to_string(f.factor_type())) +
                                        " but " + to_tag(g) + " requires " + std::string(to_string(required))});
    }
    if (f.tau_symmetry == Symmetry::symplectic && f.a % 2 != 0) {
      out.push_back({i, "symplectic_dimension", name + ": a symplectic tau needs even a, got " + std::to_string(f.a)});
    }
  }
  const int expected = *g.dual_partition_size();
  if (dimension != expected) {
    out.push_back({std::nullopt, "dimension",
                   "sum of a*b is " + std::to_string(dimension) + ", " + to_tag(g) + " needs " + std::to_string(expected)});
  }
  return out;
}

inline void require_valid_parameter(const ArthurParameter& psi) {
  auto violations = validate_parameter(psi);
  if (violations.empty()) return;
  std::string msg = "invalid Arthur parameter:";
  for (const auto& v : violations) msg += " [" + v.rule + "] " + v.detail + ";";
  msg.pop_back();
  throw InvalidParameter(msg);
}

/// The dual-group partition with a_i copies of b_i.
inline Partition partition_of(const ArthurParameter& psi) {
  require_valid_parameter(psi);
  std::vector<int> raw;
  for (const auto& f : psi.factors) raw.insert(raw.end(), static_cast<std::size_t>(f.a), f.b);
  return Partition(std::move(raw));
}

inline bool is_generic(const ArthurParameter& psi) {
  require_valid_parameter(psi);
  return std::all_of(psi.factors.begin(), psi.factors.end(), [](const SimpleFactor& f) { return f.b == 1; });
}

/// Barbasch-Vogan dual of the parameter's partition: the expected
/// ceiling for orbits carrying non-zero Fourier coefficients in the packet.
inline Partition fourier_bound(const ArthurParameter& psi) { return bv_dual(partition_of(psi), psi.group); }

enum class BoundOrder { dominance, lexicographic };
enum class Relation { below, equal, above, incomparable };

inline std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::below: return "below";
    case Relation::equal: return "equal";
    case Relation::above: return "above";
    case Relation::incomparable: return "incomparable";
  }
  return "?";
}

/// Position of p relative to fourier_bound(psi).
inline Relation check_bound(const Partition& p, const ArthurParameter& psi, BoundOrder order) {
  Partition bound = fourier_bound(psi);
  require_valid(p, psi.group);
  if (p == bound) return Relation::equal;
  if (order == BoundOrder::lexicographic) {
    return lex_cmp(p, bound) < 0 ? Relation::below : Relation::above;
  }
  if (dominance_leq(p, bound)) return Relation::below;
  if (dominance_leq(bound, p)) return Relation::above;
  return Relation::incomparable;
}

// Simple parameters psi = (tau, b) with tau on GL(a).

/// Whether (tau, b) with dim tau = a can be a parameter for g of some rank.
inline bool simple_type_legal(GroupKind kind, int a, int b) {
  if (a < 1 || b < 1) return false;
  switch (kind) {
    case GroupKind::so_odd:
      // tau is symplectic when b is odd, so a must be even.
      return (a * b) % 2 == 0 && (b % 2 == 0 || a % 2 == 0);
    case GroupKind::so_even:
      // tau is symplectic when b is even, so a must be even.
      return (a * b) % 2 == 0 && (b % 2 == 1 || a % 2 == 0);
    case GroupKind::sp: return a % 2 == 1 && b % 2 == 1;
    default: return false;
  }
}

inline GroupType simple_type_group(GroupKind kind, int a, int b) {
  if (kind == GroupKind::sp) return GroupType::sp((a * b - 1) / 2);
  return GroupType{kind, a * b / 2};
}

inline ArthurParameter simple_type_parameter(GroupKind kind, int a, int b) {
  if (!simple_type_legal(kind, a, b)) {
    throw InvalidParameter("(a=" + std::to_string(a) + ", b=" + std::to_string(b) + ") is not a simple parameter");
  }
  GroupType g = simple_type_group(kind, a, b);
  Symmetry required = required_factor_type(g);
  Symmetry tau = b % 2 == 1 ? required : opposite(required);
  return {g, {{"tau", a, b, tau}}};
}

/// Closed-form dual for simple parameters (tau, b), dim tau = a.
inline Partition simple_type_eta(const GroupType& g, int a, int b) {
  if (!simple_type_legal(g.kind, a, b) || simple_type_group(g.kind, a, b) != g) {
    throw InvalidParameter("(a=" + std::to_string(a) + ", b=" + std::to_string(b) + ") is not a simple parameter for " +
                           to_tag(g));
  }
  switch (g.kind) {
    case GroupKind::so_odd:
      if (b % 2 == 0 && a % 2 == 0) return concat({Partition{a + 1}, repeated(a, b - 2), Partition{a - 1, 1}});
      if (b % 2 == 0) return concat({repeated(a, b), Partition{1}});
      return concat({Partition{a + 1}, repeated(a, b - 1)});
    case GroupKind::so_even:
      if (b % 2 == 0) return repeated(a, b);
      return concat({repeated(a, b - 1), Partition{a - 1, 1}});
    case GroupKind::sp: return concat({repeated(a, b - 1), Partition{a - 1}});
    default: break;
  }
  throw InvalidParameter("no simple-type closed form for " + to_tag(g));
}

// Symplectic families (tau, 2b+1) + generic and (tau, 2b) + generic, where
// the generic part has total dimension 2m+1 (or 2m+1-a).

inline void require_case_I(int a, int b, int m) {
  if (a < 1 || b < 1 || m < 0 || a > 2 * m + 1) {
    throw InvalidParameter("(tau, 2b+1) family needs 1 <= a <= 2m+1, b >= 1, m >= 0");
  }
}

inline void require_case_III(int k, int b, int m) {
  if (k < 1 || b < 1 || m < 0) throw InvalidParameter("(tau, 2b) family needs k, b >= 1 and m >= 0");
}

/// psi = (tau, 2b+1) + (sigma, 1) on Sp(2ab+2m), dim tau = a, dim sigma =
/// 2m+1-a (the generic part is omitted when a = 2m+1).
inline ArthurParameter case_I_parameter(int a, int b, int m) {
  require_case_I(a, b, m);
  ArthurParameter psi{GroupType::sp(a * b + m), {{"tau", a, 2 * b + 1, Symmetry::orthogonal}}};
  if (a < 2 * m + 1) psi.factors.push_back({"sigma", 2 * m + 1 - a, 1, Symmetry::orthogonal});
  return psi;
}

inline Partition case_I_eta(int a, int b, int m) {
  require_case_I(a, b, m);
  if (a == 2 * m + 1) return concat({repeated(a, 2 * b), Partition{2 * m}});
  if (a % 2 == 0) return concat({Partition{2 * m}, repeated(a, 2 * b)});
  return concat({Partition{2 * m, a + 1}, repeated(a, 2 * b - 2), Partition{a - 1}});
}

/// psi = (tau, 2b) + (sigma, 1) on Sp(4kb+2m), tau symplectic on GL(2k),
/// sigma orthogonal on GL(2m+1).
inline ArthurParameter case_III_parameter(int k, int b, int m) {
  require_case_III(k, b, m);
  return {GroupType::sp(2 * k * b + m),
          {{"tau", 2 * k, 2 * b, Symmetry::symplectic}, {"sigma", 2 * m + 1, 1, Symmetry::orthogonal}}};
}

inline Partition case_III_eta(int k, int b, int m) {
  require_case_III(k, b, m);
  return concat({Partition{2 * k + 2 * m}, repeated(2 * k, 2 * b - 1)});
}

// Non-singular orbits.

/// Partition of the non-singular (full rank) Fourier coefficients.
inline Partition nonsingular_partition(const GroupType& g) {
  const int n = g.rank;
  switch (g.kind) {
    case GroupKind::sp: return repeated(2, n);
    case GroupKind::so_odd:
      return n % 2 == 0 ? concat({repeated(2, n), Partition{1}}) : concat({repeated(2, n - 1), repeated(1, 3)});
    case GroupKind::so_even:
      return n % 2 == 0 ? repeated(2, n) : concat({repeated(2, n - 1), repeated(1, 2)});
    default: break;
  }
  throw InvalidParameter("non-singular partition is defined for Sp, SOodd and SOeven, not " + to_tag(g));
}

/// Lower bound for orbits of cuspidal representations: the special
/// expansion of the non-singular partition.
inline Partition nonsingular_bound(const GroupType& g) { return special_expansion(nonsingular_partition(g), g); }

}  // namespace nilorbit

#endif  // NILORBIT_ARTHUR_HPP
