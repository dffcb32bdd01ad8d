#ifndef NILORBIT_DOT_HPP
#define NILORBIT_DOT_HPP

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nilorbit/group.hpp"
#include "nilorbit/partition.hpp"

namespace nilorbit {

/// Covering relations (upper, lower) of the dominance order restricted to
/// `nodes`, as index pairs. `nodes` must hold partitions of one total.
inline std::vector<std::pair<std::size_t, std::size_t>> dominance_covers(const std::vector<Partition>& nodes) {
  const std::size_t n = nodes.size();
  const std::size_t words = (n + 63) / 64;
  // below[i] = { j : nodes[j] < nodes[i] }
  std::vector<std::vector<std::uint64_t>> below(n, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && dominance_leq(nodes[j], nodes[i])) below[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> reachable_in_two(words, 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (below[i][j / 64] >> (j % 64) & 1) {
        for (std::size_t w = 0; w < words; ++w) reachable_in_two[w] |= below[j][w];
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      bool direct = below[i][j / 64] >> (j % 64) & 1;
      bool indirect = reachable_in_two[j / 64] >> (j % 64) & 1;
      if (direct && !indirect) edges.emplace_back(i, j);
    }
  }
  return edges;
}

/// Options for the Hasse diagram rendering.
struct HasseStyle {
  std::vector<bool> special;         // per node: drawn as a box
  std::optional<Partition> bound;    // doubly circled; nodes below it filled
};

/// Hasse diagram of the dominance order on `nodes` in DOT syntax. Edges
/// point from the larger partition to the one it covers.
inline std::string hasse_dot(const std::vector<Partition>& nodes, const HasseStyle& style,
                             const std::string& graph_name = "dominance") {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    os << "  n" << i << " [label=\"" << to_string(nodes[i]) << "\"";
    if (i < style.special.size() && style.special[i]) os << ", shape=box";
    if (style.bound) {
      if (nodes[i] == *style.bound) os << ", peripheries=2";
      if (dominance_leq(nodes[i], *style.bound)) os << ", style=filled";
    }
    os << "];\n";
  }
  for (auto [upper, lower] : dominance_covers(nodes)) {
    os << "  n" << upper << " -> n" << lower << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace nilorbit

#endif  // NILORBIT_DOT_HPP
