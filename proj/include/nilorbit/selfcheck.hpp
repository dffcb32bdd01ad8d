#ifndef NILORBIT_SELFCHECK_HPP
#define NILORBIT_SELFCHECK_HPP

#include <string>
#include <vector>

#include "nilorbit/arthur.hpp"
#include "nilorbit/duality.hpp"
#include "nilorbit/oracle.hpp"

namespace nilorbit {

// Golden families and duality properties, reported in the same shape as
// the oracle suite. Closed-form families are checked up to a fixed total
// independent of the suite size; they are cheap.

inline constexpr int kSimpleTypeMaxDimension = 24;
inline constexpr int kFamilyMaxTotal = 30;
inline constexpr int kGenericMaxDimension = 24;

namespace detail {

inline void expect_equal(OracleReport& r, const std::string& target, const GroupType& g, const Partition& input,
                         const Partition& computed, const Partition& expected) {
  if (computed != expected) r.counterexamples.push_back({target, g, input, {computed}, {expected}});
}

}  // namespace detail

/// fourier_bound of every simple parameter (tau, b) with ab <= max_dim
/// against the closed-form table.
inline OracleReport check_simple_type_table(int max_dim = kSimpleTypeMaxDimension) {
  OracleReport r;
  r.target = "simple_type_eta";
  for (GroupKind kind : {GroupKind::so_odd, GroupKind::so_even, GroupKind::sp}) {
    for (int a = 1; a <= max_dim; ++a) {
      for (int b = 1; a * b <= max_dim; ++b) {
        if (!simple_type_legal(kind, a, b)) continue;
        ArthurParameter psi = simple_type_parameter(kind, a, b);
        detail::expect_equal(r, r.target, psi.group, partition_of(psi), fourier_bound(psi),
                             simple_type_eta(psi.group, a, b));
      }
    }
  }
  r.settle();
  return r;
}

inline OracleReport check_case_I_family(int max_total = kFamilyMaxTotal) {
  OracleReport r;
  r.target = "case_I_eta";
  for (int a = 1; 2 * a <= max_total; ++a) {
    for (int b = 1; 2 * a * b <= max_total; ++b) {
      for (int m = 0; 2 * a * b + 2 * m <= max_total; ++m) {
        if (a > 2 * m + 1) continue;
        ArthurParameter psi = case_I_parameter(a, b, m);
        detail::expect_equal(r, r.target, psi.group, partition_of(psi), fourier_bound(psi), case_I_eta(a, b, m));
      }
    }
  }
  r.settle();
  return r;
}

inline OracleReport check_case_III_family(int max_total = kFamilyMaxTotal) {
  OracleReport r;
  r.target = "case_III_eta";
  for (int k = 1; 4 * k <= max_total; ++k) {
    for (int b = 1; 4 * k * b <= max_total; ++b) {
      for (int m = 0; 4 * k * b + 2 * m <= max_total; ++m) {
        ArthurParameter psi = case_III_parameter(k, b, m);
        detail::expect_equal(r, r.target, psi.group, partition_of(psi), fourier_bound(psi), case_III_eta(k, b, m));
      }
    }
  }
  r.settle();
  return r;
}

/// Symplectic expansion of [2m, a^(2b)] for odd a <= 2m is
/// [2m, a+1, a^(2b-2), a-1].
inline OracleReport check_expansion_identity(int max_total = kFamilyMaxTotal) {
  OracleReport r;
  r.target = "expansion_identity";
  for (int m = 1; 2 * m <= max_total; ++m) {
    for (int a = 1; a <= 2 * m; a += 2) {
      for (int b = 1; 2 * m + 2 * a * b <= max_total; ++b) {
        Partition p = concat({Partition{2 * m}, repeated(a, 2 * b)});
        GroupType g = GroupType::sp(p.total() / 2);
        Partition expected = concat({Partition{2 * m, a + 1}, repeated(a, 2 * b - 2), Partition{a - 1}});
        detail::expect_equal(r, r.target, g, p, special_expansion(p, g), expected);
      }
    }
  }
  r.settle();
  return r;
}

/// Duality of the trivial dual partition is the principal partition.
inline OracleReport check_generic_principal(int max_dim = kGenericMaxDimension) {
  OracleReport r;
  r.target = "generic_principal";
  for (int dim = 1; dim <= max_dim; ++dim) {
    std::vector<GroupType> groups;
    if (dim % 2 == 1) {
      groups.push_back(GroupType::sp((dim - 1) / 2));
    } else {
      groups.push_back(GroupType::so_odd(dim / 2));
      groups.push_back(GroupType::so_even(dim / 2));
    }
    for (const auto& g : groups) {
      Partition trivial = repeated(1, dim);
      if (!satisfies_parity(trivial, dual_parity_of(g))) continue;
      detail::expect_equal(r, r.target, g, trivial, bv_dual(trivial, g), principal_partition(g));
    }
  }
  r.settle();
  return r;
}

/// For each group with dual-side total <= max_size: every output of bv_dual
/// is valid and special, and bv_dual reverses dominance.
inline OracleReport check_duality_properties(int max_size, int cap = kDefaultEnumerationCap) {
  OracleReport r;
  r.target = "bv_dual_properties";
  for (int dim = 0; dim <= max_size; ++dim) {
    r.sizes_checked.push_back(dim);
    std::vector<GroupType> groups;
    if (dim % 2 == 1) {
      groups.push_back(GroupType::sp((dim - 1) / 2));
    } else {
      groups.push_back(GroupType::so_odd(dim / 2));
      groups.push_back(GroupType::so_even(dim / 2));
    }
    std::vector<Partition> all = enumerate_partitions(dim, cap);
    for (const auto& g : groups) {
      std::vector<Partition> inputs;
      std::vector<Partition> outputs;
      for (const auto& q : all) {
        if (!satisfies_parity(q, dual_parity_of(g))) continue;
        inputs.push_back(q);
        outputs.push_back(bv_dual(q, g));
        const Partition& out = outputs.back();
        if (!is_valid(out, g) || !is_special(out, g)) {
          r.counterexamples.push_back({"bv_dual_special", g, q, {out}, {}});
        }
      }
      for (std::size_t i = 0; i < inputs.size(); ++i) {
        for (std::size_t j = 0; j < inputs.size(); ++j) {
          if (i != j && dominance_leq(inputs[i], inputs[j]) && !dominance_leq(outputs[j], outputs[i])) {
            r.counterexamples.push_back({"bv_dual_order", g, inputs[i], {outputs[i]}, {outputs[j]}});
          }
        }
      }
    }
  }
  r.settle();
  return r;
}

/// bv_dual into Sp followed by bv_dual into SO(2n+1) (and the reverse, and
/// SO(2n) twice) fixes every special partition of total <= max_size.
inline OracleReport check_duality_round_trip(int max_size, int cap = kDefaultEnumerationCap) {
  OracleReport r;
  r.target = "bv_dual_roundtrip";
  for (int size = 0; size <= max_size; ++size) {
    r.sizes_checked.push_back(size);
    std::vector<std::pair<GroupType, GroupType>> legs;  // (group of q, group of the first dual)
    if (size % 2 == 1) {
      legs.push_back({GroupType::so_odd(size / 2), GroupType::sp(size / 2)});
    } else {
      legs.push_back({GroupType::sp(size / 2), GroupType::so_odd(size / 2)});
      legs.push_back({GroupType::so_even(size / 2), GroupType::so_even(size / 2)});
    }
    for (const auto& q : enumerate_partitions(size, cap)) {
      for (const auto& [home, across] : legs) {
        if (!is_valid(q, home) || !is_special(q, home)) continue;
        Partition there = bv_dual(q, across);
        Partition back = bv_dual(there, home);
        if (back != q) r.counterexamples.push_back({"bv_dual_roundtrip", home, q, {back}, {q}});
      }
    }
  }
  r.settle();
  return r;
}

/// Everything the CLI `selfcheck` runs.
inline OracleReport run_selfcheck(int max_size, const OracleOptions& options = {}) {
  OracleReport report = run_oracle_suite(max_size, options);
  report.target = "selfcheck";
  report.absorb(check_simple_type_table());
  report.absorb(check_case_I_family());
  report.absorb(check_case_III_family());
  report.absorb(check_expansion_identity());
  report.absorb(check_generic_principal());
  report.absorb(check_duality_properties(max_size, options.cap));
  report.absorb(check_duality_round_trip(max_size, options.cap));
  return report;
}

}  // namespace nilorbit

#endif  // NILORBIT_SELFCHECK_HPP
