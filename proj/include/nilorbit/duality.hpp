#ifndef NILORBIT_DUALITY_HPP
#define NILORBIT_DUALITY_HPP

#include <optional>
#include <string>
#include <string_view>

#include "nilorbit/collapse.hpp"
#include "nilorbit/group.hpp"
#include "nilorbit/partition.hpp"

namespace nilorbit {

enum class SizeAdjust { none, decrement_smallest, increment_largest };
enum class TransposePosition { after_collapse, before_collapse };

inline std::string_view to_string(SizeAdjust s) {
  switch (s) {
    case SizeAdjust::none: return "none";
    case SizeAdjust::decrement_smallest: return "decrement_smallest";
    case SizeAdjust::increment_largest: return "increment_largest";
  }
  return "?";
}

inline std::string_view to_string(TransposePosition t) {
  return t == TransposePosition::after_collapse ? "after_collapse" : "before_collapse";
}

/// How Barbasch-Vogan duality into `group` is assembled from a size
/// adjustment, a parity collapse and a transpose. Type A has no collapse
/// (`collapse_type` is unset) and is a pure transpose.
struct DualityRecipe {
  GroupType group;
  SizeAdjust size_adjust = SizeAdjust::none;
  std::optional<GroupType> collapse_type;
  TransposePosition transpose_position = TransposePosition::after_collapse;
};

inline DualityRecipe duality_recipe(const GroupType& g) {
  switch (g.kind) {
    case GroupKind::sp:
      return {g, SizeAdjust::decrement_smallest, g, TransposePosition::after_collapse};
    case GroupKind::so_odd:
      return {g, SizeAdjust::increment_largest, g, TransposePosition::after_collapse};
    case GroupKind::so_even:
      return {g, SizeAdjust::none, g, TransposePosition::before_collapse};
    case GroupKind::type_a:
      return {g, SizeAdjust::none, std::nullopt, TransposePosition::before_collapse};
    case GroupKind::metaplectic_sp: break;
  }
  throw InvalidParameter("no duality recipe for the metaplectic cover " + to_tag(g));
}

/// Intermediate stages of one duality evaluation, for audit output.
struct DualityTrace {
  DualityRecipe recipe;
  Partition input;
  Partition size_adjusted;
  Partition collapsed;
  Partition result;
};

/// Barbasch-Vogan duality from dual-group partitions to partitions of g,
/// with every intermediate stage.
inline DualityTrace bv_dual_trace(const Partition& q, const GroupType& g) {
  DualityRecipe recipe = duality_recipe(g);
  const int expected = *g.dual_partition_size();
  detail::require_size(q, expected, "dual-side input for " + to_tag(g));
  if (!satisfies_parity(q, dual_parity_of(g))) {
    throw ParityViolation(to_string(q) + " is not " + with_article(dual_parity_of(g)) +
                          " partition of " + std::to_string(expected) + " (dual side of " +
                          to_tag(g) + ")");
  }

  DualityTrace trace{recipe, q, q, q, q};
  switch (recipe.size_adjust) {
    case SizeAdjust::decrement_smallest: trace.size_adjusted = decrement_smallest(q); break;
    case SizeAdjust::increment_largest: trace.size_adjusted = increment_largest(q); break;
    case SizeAdjust::none: break;
  }
  if (!recipe.collapse_type) {
    trace.collapsed = transpose(trace.size_adjusted);
    trace.result = trace.collapsed;
  } else if (recipe.transpose_position == TransposePosition::after_collapse) {
    trace.collapsed = parity_collapse(trace.size_adjusted, *recipe.collapse_type);
    trace.result = transpose(trace.collapsed);
  } else {
    trace.collapsed = parity_collapse(transpose(trace.size_adjusted), *recipe.collapse_type);
    trace.result = trace.collapsed;
  }
  return trace;
}

inline Partition bv_dual(const Partition& q, const GroupType& g) { return bv_dual_trace(q, g).result; }

/// Lusztig-Spaltenstein duality within the type of g: the parity collapse
/// of the transpose. Its image is exactly the set of special partitions.
inline Partition ls_dual(const Partition& p, const GroupType& g) {
  if (g.kind == GroupKind::metaplectic_sp) {
    throw InvalidParameter("no same-type duality for the metaplectic cover");
  }
  require_valid(p, g);
  return parity_collapse(transpose(p), g);
}

}  // namespace nilorbit

#endif  // NILORBIT_DUALITY_HPP
