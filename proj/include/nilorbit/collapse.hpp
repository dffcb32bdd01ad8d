#ifndef NILORBIT_COLLAPSE_HPP
#define NILORBIT_COLLAPSE_HPP

#include <deque>
#include <set>
#include <string>
#include <vector>

#include "nilorbit/group.hpp"
#include "nilorbit/partition.hpp"

namespace nilorbit {

enum class Direction { max_below, min_above };

namespace detail {

/// Partitions reachable from p by moving a single box to another row,
/// downward (toward later rows; the result is dominated by p) or upward.
/// Moving a box one row at a time between any two rows generates every
/// covering relation of the dominance order, so repeated moves reach every
/// comparable partition.
inline std::vector<Partition> unit_moves(const Partition& p, Direction dir) {
  std::vector<Partition> out;
  const std::vector<int>& rows = p.vec();
  const std::size_t len = rows.size();
  auto try_move = [&](std::size_t from, std::size_t to) {
    std::vector<int> next = rows;
    if (to == len) next.push_back(0);
    --next[from];
    ++next[to];
    if (std::is_sorted(next.begin(), next.end(), std::greater<>())) {
      out.emplace_back(std::move(next));
    }
  };
  for (std::size_t from = 0; from < len; ++from) {
    // Only the last row of a block of equal parts can lose a box, and only
    // the first row of a block can gain one.
    if (from + 1 < len && rows[from + 1] == rows[from]) continue;
    if (dir == Direction::max_below) {
      for (std::size_t to = from + 1; to <= len; ++to) {
        if (to < len && rows[to - 1] == rows[to]) continue;
        try_move(from, to);
      }
    } else {
      for (std::size_t to = 0; to < from; ++to) {
        if (to > 0 && rows[to - 1] == rows[to]) continue;
        try_move(from, to);
      }
    }
  }
  return out;
}

/// Keeps the dominance-maximal (max_below) or -minimal (min_above)
/// members of `found`.
inline std::vector<Partition> extremal_elements(const std::vector<Partition>& found, Direction dir) {
  std::vector<Partition> out;
  for (const auto& p : found) {
    bool beaten = false;
    for (const auto& q : found) {
      if (q == p) continue;
      bool q_beats_p = dir == Direction::max_below ? dominance_leq(p, q) : dominance_leq(q, p);
      if (q_beats_p) {
        beaten = true;
        break;
      }
    }
    if (!beaten) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), PartitionOrder{});
  return out;
}

/// Breadth-first walk by unit moves from `start`, stopping at accepted
/// partitions. Any accepted q below (resp. above) start that is extremal is
/// reached along a path of rejected partitions, so the extremal accepted
/// partitions are exactly the extremal members of what the walk finds.
template <class Accept>
std::vector<Partition> frontier_search(const Partition& start, Accept&& accept, Direction dir) {
  std::set<Partition, PartitionOrder> seen{start};
  std::deque<Partition> queue{start};
  std::vector<Partition> found;
  while (!queue.empty()) {
    Partition cur = std::move(queue.front());
    queue.pop_front();
    if (accept(cur)) {
      found.push_back(cur);
      continue;
    }
    for (auto& next : unit_moves(cur, dir)) {
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return extremal_elements(found, dir);
}

inline Partition single_extremum(std::vector<Partition> extrema, const std::string& what) {
  if (extrema.size() == 1) return std::move(extrema.front());
  std::string msg = what + ": ";
  if (extrema.empty()) {
    msg += "no candidate partition exists";
  } else {
    msg += std::to_string(extrema.size()) + " incomparable extrema:";
    for (const auto& e : extrema) msg += " " + to_exponent_string(e);
  }
  throw NonUniqueExtremum(msg, std::move(extrema));
}

}  // namespace detail

/// Largest partition of g's type dominated by p.
///
/// Repeatedly takes the largest part of the wrong parity with odd
/// multiplicity, removes a box from its last occurrence and puts it on the
/// first later row that is at least two shorter. Type A is the identity.
inline Partition parity_collapse(const Partition& p, const GroupType& g) {
  detail::require_size(p, g.partition_size(), "collapse to " + to_tag(g));
  const Parity parity = parity_of(g);
  if (parity == Parity::none) return p;
  const int constrained = parity == Parity::symplectic ? 1 : 0;

  std::vector<int> rows = p.vec();
  while (true) {
    int worst = -1;
    for (std::size_t i = 0; i < rows.size();) {
      std::size_t j = i;
      while (j < rows.size() && rows[j] == rows[i]) ++j;
      if (rows[i] % 2 == constrained && (j - i) % 2 == 1) {
        worst = rows[i];
        break;
      }
      i = j;
    }
    if (worst < 0) return Partition(std::move(rows));

    std::size_t last = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i] == worst) last = i;
    }
    --rows[last];
    std::size_t k = last + 1;
    while (k < rows.size() && rows[k] >= worst - 1) ++k;
    if (k == rows.size()) {
      rows.push_back(1);
    } else {
      ++rows[k];
    }
    std::erase(rows, 0);
  }
}

/// Every maximal valid special partition of g dominated by p. A single
/// element whenever the special collapse is well defined.
inline std::vector<Partition> special_collapse_candidates(const Partition& p, const GroupType& g) {
  // Any valid partition below p is already below its parity collapse.
  Partition start = parity_collapse(p, g);
  if (parity_of(g) == Parity::none) return {start};
  auto accept = [&](const Partition& q) {
    return satisfies_parity(q, parity_of(g)) && is_special(q, g);
  };
  return detail::frontier_search(start, accept, Direction::max_below);
}

/// Largest valid special partition of g dominated by p. Throws
/// NonUniqueExtremum when several incomparable maxima exist.
inline Partition special_collapse(const Partition& p, const GroupType& g) {
  return detail::single_extremum(special_collapse_candidates(p, g),
                                 "special collapse of " + to_exponent_string(p) + " in " + to_tag(g));
}

/// Smallest special partition of g dominating the valid partition p. For
/// the metaplectic cover "special" means metaplectic-special.
inline std::vector<Partition> special_expansion_candidates(const Partition& p, const GroupType& g) {
  require_valid(p, g);
  if (parity_of(g) == Parity::none) return {p};
  auto accept = [&](const Partition& q) {
    return satisfies_parity(q, parity_of(g)) && is_special(q, g);
  };
  return detail::frontier_search(p, accept, Direction::min_above);
}

inline Partition special_expansion(const Partition& p, const GroupType& g) {
  return detail::single_extremum(special_expansion_candidates(p, g),
                                 "expansion of " + to_exponent_string(p) + " in " + to_tag(g));
}

/// Smallest metaplectic-special partition dominating the symplectic
/// partition p (non-strict).
inline Partition metaplectic_expansion(const Partition& p) {
  if (p.total() % 2 != 0) {
    throw SizeMismatch("metaplectic expansion needs an even total, got " + std::to_string(p.total()));
  }
  return special_expansion(p, GroupType::metaplectic(p.total() / 2));
}

}  // namespace nilorbit

#endif  // NILORBIT_COLLAPSE_HPP
