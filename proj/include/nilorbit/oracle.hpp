#ifndef NILORBIT_ORACLE_HPP
#define NILORBIT_ORACLE_HPP

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "nilorbit/collapse.hpp"
#include "nilorbit/duality.hpp"
#include "nilorbit/group.hpp"
#include "nilorbit/partition.hpp"

namespace nilorbit {

// Exhaustive reference implementations. Everything here enumerates the
// full set of partitions of a given total and filters it; nothing calls the
// fast routines in collapse.hpp except to compare against them.

enum class CandidatePredicate { valid, special, metaplectic_special };

using SpecialnessFn = std::function<bool(const Partition&, const GroupType&)>;

inline SpecialnessFn default_specialness() {
  return [](const Partition& p, const GroupType& g) { return is_special(p, g); };
}

struct BruteResult {
  std::vector<Partition> extrema;  // sorted with PartitionOrder

  bool unique() const noexcept { return extrema.size() == 1; }
  const Partition& value() const { return extrema.front(); }
};

/// All dominance-maximal (max_below) or -minimal (min_above) partitions q of
/// p's total with q <= p (resp. q >= p) satisfying the predicate for g.
/// `special` decides specialness of valid partitions.
inline BruteResult brute_extremum(const Partition& p, const GroupType& g, CandidatePredicate predicate,
                                  Direction dir, int cap = kDefaultEnumerationCap,
                                  const SpecialnessFn& special = default_specialness()) {
  detail::require_size(p, g.partition_size(), "brute-force extremum in " + to_tag(g));
  std::vector<Partition> candidates;
  for (auto& q : enumerate_partitions(p.total(), cap)) {
    bool related = dir == Direction::max_below ? dominance_leq(q, p) : dominance_leq(p, q);
    if (!related) continue;
    bool ok = false;
    switch (predicate) {
      case CandidatePredicate::valid: ok = satisfies_parity(q, parity_of(g)); break;
      case CandidatePredicate::special: ok = satisfies_parity(q, parity_of(g)) && special(q, g); break;
      case CandidatePredicate::metaplectic_special:
        ok = satisfies_parity(q, Parity::symplectic) && is_metaplectic_special(q);
        break;
    }
    if (ok) candidates.push_back(std::move(q));
  }
  if (candidates.empty()) {
    throw InvariantViolation("brute-force extremum: no candidate partition related to " +
                             to_exponent_string(p) + " in " + to_tag(g));
  }
  BruteResult out;
  for (const auto& c : candidates) {
    bool beaten = std::any_of(candidates.begin(), candidates.end(), [&](const Partition& other) {
      if (other == c) return false;
      return dir == Direction::max_below ? dominance_leq(c, other) : dominance_leq(other, c);
    });
    if (!beaten) out.extrema.push_back(c);
  }
  std::sort(out.extrema.begin(), out.extrema.end(), PartitionOrder{});
  return out;
}

/// One disagreement between a fast routine and its exhaustive reference.
/// Membership checks (is_special against the duality image) encode
/// "true" as `[input]` and "false" as `[]`.
struct Counterexample {
  std::string target;
  GroupType group;
  Partition input;
  std::vector<Partition> fast_result;
  std::vector<Partition> oracle_result;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// An input whose reference extremum is attained by more than one
/// partition.
struct UniquenessFailure {
  std::string target;
  GroupType group;
  Partition input;
  std::vector<Partition> extrema;

  friend bool operator==(const UniquenessFailure&, const UniquenessFailure&) = default;
};

struct OracleReport {
  std::string target;
  std::vector<int> sizes_checked;
  bool agree = true;
  std::vector<Counterexample> counterexamples;
  std::vector<UniquenessFailure> uniqueness_failures;

  /// Restores `agree` from the two failure lists.
  void settle() { agree = counterexamples.empty() && uniqueness_failures.empty(); }

  void absorb(const OracleReport& other) {
    counterexamples.insert(counterexamples.end(), other.counterexamples.begin(), other.counterexamples.end());
    uniqueness_failures.insert(uniqueness_failures.end(), other.uniqueness_failures.begin(),
                               other.uniqueness_failures.end());
    settle();
  }

  friend bool operator==(const OracleReport&, const OracleReport&) = default;
};

struct OracleOptions {
  int cap = kDefaultEnumerationCap;
  SpecialnessFn special = default_specialness();
};

namespace detail {

inline void compare_extremum(OracleReport& report, const std::string& target, const GroupType& g,
                             const Partition& input, std::vector<Partition> fast, const BruteResult& oracle) {
  std::sort(fast.begin(), fast.end(), PartitionOrder{});
  if (fast != oracle.extrema) {
    report.counterexamples.push_back({target, g, input, std::move(fast), oracle.extrema});
  }
  if (oracle.extrema.size() > 1) {
    report.uniqueness_failures.push_back({target, g, input, oracle.extrema});
  }
}

// An empty reference result means the predicate admits no candidate; that
// is reported as a disagreement instead of aborting the suite.
template <class... Args>
BruteResult brute_or_empty(Args&&... args) {
  try {
    return brute_extremum(std::forward<Args>(args)...);
  } catch (const InvariantViolation&) {
    return {};
  }
}

template <class Fast>
std::vector<Partition> fast_candidates(Fast&& fast) {
  try {
    return fast();
  } catch (const NonUniqueExtremum& e) {
    return e.extrema();
  }
}

inline void check_specialness(OracleReport& report, const GroupType& g, const std::vector<Partition>& valid,
                              const SpecialnessFn& special) {
  std::set<Partition, PartitionOrder> image;
  for (const auto& q : valid) image.insert(ls_dual(q, g));
  for (const auto& p : valid) {
    bool claimed = special(p, g);
    bool in_image = image.count(p) > 0;
    if (claimed != in_image) {
      report.counterexamples.push_back({"is_special", g, p, claimed ? std::vector{p} : std::vector<Partition>{},
                                        in_image ? std::vector{p} : std::vector<Partition>{}});
    }
    Partition twice = ls_dual(ls_dual(p, g), g);
    if ((twice == p) != claimed) {
      report.counterexamples.push_back({"ls_dual_involution", g, p, {twice},
                                        claimed ? std::vector{p} : std::vector<Partition>{}});
    }
  }
}

}  // namespace detail

/// Compares parity_collapse, special_collapse, special_expansion and
/// metaplectic_expansion with brute_extremum on every input of every total
/// up to max_size, and is_special with the image of ls_dual.
///
/// Collapses are checked on every partition of the group's total (their
/// natural domain); expansions on every valid partition. Failures are
/// returned as data; the report is in input order.
inline OracleReport run_oracle_suite(int max_size, const OracleOptions& options = {}) {
  if (max_size > options.cap) {
    throw CapExceeded("oracle suite size " + std::to_string(max_size) + " exceeds the cap " +
                      std::to_string(options.cap));
  }
  OracleReport report;
  report.target = "oracle_suite";
  const auto& special = options.special;
  for (int size = 0; size <= max_size; ++size) {
    report.sizes_checked.push_back(size);
    const std::vector<Partition> all = enumerate_partitions(size, options.cap);
    for (const GroupType& g : groups_of_size(size)) {
      std::vector<Partition> valid;
      for (const auto& p : all) {
        if (satisfies_parity(p, parity_of(g))) valid.push_back(p);
      }

      if (g.kind == GroupKind::metaplectic_sp) {
        // Mp(0) has no metaplectic-special partition at all.
        if (size == 0) continue;
        for (const auto& p : valid) {
          auto fast = detail::fast_candidates([&] { return std::vector{metaplectic_expansion(p)}; });
          auto oracle = detail::brute_or_empty(p, g, CandidatePredicate::metaplectic_special,
                                               Direction::min_above, options.cap, special);
          detail::compare_extremum(report, "metaplectic_expansion", g, p, std::move(fast), oracle);
        }
        continue;
      }

      if (g.kind != GroupKind::type_a) detail::check_specialness(report, g, valid, special);

      for (const auto& p : all) {
        auto collapsed =
            detail::brute_or_empty(p, g, CandidatePredicate::valid, Direction::max_below, options.cap, special);
        detail::compare_extremum(report, "parity_collapse", g, p, {parity_collapse(p, g)}, collapsed);

        auto special_below =
            detail::brute_or_empty(p, g, CandidatePredicate::special, Direction::max_below, options.cap, special);
        detail::compare_extremum(report, "special_collapse", g, p, special_collapse_candidates(p, g),
                                 special_below);
      }
      for (const auto& p : valid) {
        auto oracle =
            detail::brute_or_empty(p, g, CandidatePredicate::special, Direction::min_above, options.cap, special);
        detail::compare_extremum(report, "special_expansion", g, p, special_expansion_candidates(p, g), oracle);
      }
    }
  }
  report.settle();
  return report;
}

}  // namespace nilorbit

#endif  // NILORBIT_ORACLE_HPP
