#ifndef NILORBIT_GROUP_HPP
#define NILORBIT_GROUP_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "nilorbit/errors.hpp"
#include "nilorbit/partition.hpp"

namespace nilorbit {

enum class GroupKind { so_odd, sp, so_even, metaplectic_sp, type_a };

/// Parity constraint carried by a family of partitions.
enum class Parity {
  symplectic,  // odd parts occur with even multiplicity
  orthogonal,  // even parts occur with even multiplicity
  none,
};

/// A classical group at the level of its nilpotent-orbit partitions.
/// `rank` is n for SO(2n+1), Sp(2n), SO(2n) and the metaplectic cover of
/// Sp(2n); for type A it is N itself.
struct GroupType {
  GroupKind kind = GroupKind::type_a;
  int rank = 0;

  static GroupType so_odd(int n) { return {GroupKind::so_odd, n}; }
  static GroupType sp(int n) { return {GroupKind::sp, n}; }
  static GroupType so_even(int n) { return {GroupKind::so_even, n}; }
  static GroupType metaplectic(int n) { return {GroupKind::metaplectic_sp, n}; }
  static GroupType type_a(int n) { return {GroupKind::type_a, n}; }

  /// Total of the partitions labelling nilpotent orbits of this group.
  int partition_size() const {
    switch (kind) {
      case GroupKind::so_odd: return 2 * rank + 1;
      case GroupKind::sp:
      case GroupKind::so_even:
      case GroupKind::metaplectic_sp: return 2 * rank;
      case GroupKind::type_a: return rank;
    }
    return 0;
  }

  /// Total of the dual-group partitions fed to Barbasch-Vogan duality.
  /// None for the metaplectic cover, which has no duality recipe here.
  std::optional<int> dual_partition_size() const {
    switch (kind) {
      case GroupKind::sp: return 2 * rank + 1;
      case GroupKind::so_odd:
      case GroupKind::so_even: return 2 * rank;
      case GroupKind::type_a: return rank;
      case GroupKind::metaplectic_sp: return std::nullopt;
    }
    return std::nullopt;
  }

  friend bool operator==(const GroupType&, const GroupType&) = default;
};

inline Parity parity_of(const GroupType& g) {
  switch (g.kind) {
    case GroupKind::sp:
    case GroupKind::metaplectic_sp: return Parity::symplectic;
    case GroupKind::so_odd:
    case GroupKind::so_even: return Parity::orthogonal;
    case GroupKind::type_a: return Parity::none;
  }
  return Parity::none;
}

/// Parity of the dual-group partitions (SO(2n+1) <-> Sp(2n), SO(2n) self-dual).
inline Parity dual_parity_of(const GroupType& g) {
  switch (g.kind) {
    case GroupKind::sp: return Parity::orthogonal;
    case GroupKind::so_odd: return Parity::symplectic;
    case GroupKind::so_even: return Parity::orthogonal;
    case GroupKind::type_a: return Parity::none;
    case GroupKind::metaplectic_sp: break;
  }
  throw InvalidParameter("the metaplectic cover has no dual group recipe");
}

/// CLI/JSON tag. The integer is the partition size, not the rank:
/// `Sp:8` is Sp(8) with rank 4.
inline std::string to_tag(const GroupType& g) {
  std::string size = std::to_string(g.partition_size());
  switch (g.kind) {
    case GroupKind::sp: return "Sp:" + size;
    case GroupKind::so_odd: return "SOodd:" + size;
    case GroupKind::so_even: return "SOeven:" + size;
    case GroupKind::metaplectic_sp: return "Mp:" + size;
    case GroupKind::type_a: return "A:" + size;
  }
  return "?";
}

inline std::string to_string(Parity p) {
  switch (p) {
    case Parity::symplectic: return "symplectic";
    case Parity::orthogonal: return "orthogonal";
    case Parity::none: return "none";
  }
  return "?";
}

/// "a symplectic", "an orthogonal" ... for messages.
inline std::string with_article(Parity p) {
  return (p == Parity::orthogonal ? "an " : "a ") + to_string(p);
}

inline GroupType parse_group_tag(std::string_view tag) {
  auto colon = tag.find(':');
  if (colon == std::string_view::npos) {
    throw UsageError("group tag '" + std::string(tag) + "' lacks ':<size>'");
  }
  std::string_view name = tag.substr(0, colon);
  int size = detail::parse_int(tag.substr(colon + 1), tag);
  if (size < 0) throw UsageError("negative size in group tag '" + std::string(tag) + "'");
  auto need_even = [&](GroupKind k) {
    if (size % 2 != 0) {
      throw UsageError("group tag '" + std::string(tag) + "' needs an even size");
    }
    return GroupType{k, size / 2};
  };
  if (name == "Sp") return need_even(GroupKind::sp);
  if (name == "SOeven") return need_even(GroupKind::so_even);
  if (name == "Mp") return need_even(GroupKind::metaplectic_sp);
  if (name == "SOodd") {
    if (size % 2 != 1) {
      throw UsageError("group tag '" + std::string(tag) + "' needs an odd size");
    }
    return GroupType::so_odd(size / 2);
  }
  if (name == "A") return GroupType::type_a(size);
  throw UsageError("unknown group '" + std::string(name) + "' (expected Sp, SOodd, SOeven, Mp or A)");
}

/// Parity check without any size requirement.
inline bool satisfies_parity(const Partition& p, Parity parity) {
  if (parity == Parity::none) return true;
  const int constrained = parity == Parity::symplectic ? 1 : 0;
  std::map<int, int> mult;
  for (int x : p) ++mult[x];
  for (auto [value, count] : mult) {
    if (value % 2 == constrained && count % 2 != 0) return false;
  }
  return true;
}

namespace detail {

inline void require_size(const Partition& p, int expected, std::string_view context) {
  if (p.total() != expected) {
    throw SizeMismatch(std::string(context) + ": partition " + to_string(p) + " has total " +
                       std::to_string(p.total()) + ", expected " + std::to_string(expected));
  }
}

}  // namespace detail

/// Whether p labels a nilpotent orbit of g. Throws SizeMismatch if the
/// total is wrong for g.
inline bool is_valid(const Partition& p, const GroupType& g) {
  detail::require_size(p, g.partition_size(), to_tag(g));
  return satisfies_parity(p, parity_of(g));
}

inline void require_valid(const Partition& p, const GroupType& g) {
  if (!is_valid(p, g)) {
    throw ParityViolation(to_string(p) + " is not " + with_article(parity_of(g)) +
                          " partition (" + to_tag(g) + ")");
  }
}

/// Even parts strictly larger than the largest odd part, counted with
/// multiplicity, is odd.
inline bool is_metaplectic_special(const Partition& p) {
  if (!satisfies_parity(p, Parity::symplectic)) {
    throw ParityViolation(to_string(p) + " is not a symplectic partition");
  }
  int largest_odd = 0;
  for (int x : p) {
    if (x % 2 == 1) largest_odd = std::max(largest_odd, x);
  }
  int count = 0;
  for (int x : p) {
    if (x % 2 == 0 && x > largest_odd) ++count;
  }
  return count % 2 == 1;
}

/// Specialness via the parity of the transpose: for Sp and SO(2n) the
/// transpose must be symplectic, for SO(2n+1) orthogonal. Every type A
/// partition is special; for the metaplectic cover this is
/// is_metaplectic_special. Throws ParityViolation on an invalid input.
inline bool is_special(const Partition& p, const GroupType& g) {
  require_valid(p, g);
  switch (g.kind) {
    case GroupKind::type_a: return true;
    case GroupKind::sp:
    case GroupKind::so_even: return satisfies_parity(transpose(p), Parity::symplectic);
    case GroupKind::so_odd: return satisfies_parity(transpose(p), Parity::orthogonal);
    case GroupKind::metaplectic_sp: return is_metaplectic_special(p);
  }
  return false;
}

/// Partition of the regular nilpotent orbit.
inline Partition principal_partition(const GroupType& g) {
  switch (g.kind) {
    case GroupKind::sp: return Partition{2 * g.rank};
    case GroupKind::so_odd: return Partition{2 * g.rank + 1};
    case GroupKind::so_even:
      if (g.rank == 0) return {};
      return Partition{2 * g.rank - 1, 1};
    case GroupKind::type_a: return Partition{g.rank};
    case GroupKind::metaplectic_sp: break;
  }
  throw InvalidParameter("principal partition is not defined for the metaplectic cover");
}

/// Groups whose orbit partitions have the given total, in a fixed order.
inline std::vector<GroupType> groups_of_size(int size, bool include_type_a = true) {
  std::vector<GroupType> out;
  if (size % 2 == 0) {
    out.push_back(GroupType::sp(size / 2));
    out.push_back(GroupType::so_even(size / 2));
    out.push_back(GroupType::metaplectic(size / 2));
  } else {
    out.push_back(GroupType::so_odd(size / 2));
  }
  if (include_type_a) out.push_back(GroupType::type_a(size));
  return out;
}

}  // namespace nilorbit

#endif  // NILORBIT_GROUP_HPP
