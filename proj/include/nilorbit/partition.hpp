#ifndef NILORBIT_PARTITION_HPP
#define NILORBIT_PARTITION_HPP

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilorbit/errors.hpp"

namespace nilorbit {

/// An integer partition: a non-increasing list of positive parts.
///
/// Every constructor normalizes (drops zeros, sorts descending), so two
/// partitions with the same multiset of parts always compare equal. The
/// total is cached because almost every operation checks it.
class Partition {
 public:
  using Part = int;

  Partition() = default;

  Partition(std::initializer_list<Part> raw) : Partition(std::vector<Part>(raw)) {}

  /// Normalizes `raw`. Throws InvalidPartition on a negative entry.
  explicit Partition(std::vector<Part> raw) : parts_(std::move(raw)) {
    for (Part x : parts_) {
      if (x < 0) {
        throw InvalidPartition("negative part " + std::to_string(x));
      }
    }
    std::erase(parts_, 0);
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  std::span<const Part> parts() const noexcept { return parts_; }
  const std::vector<Part>& vec() const noexcept { return parts_; }

  /// Sum of the parts.
  int total() const noexcept { return total_; }
  /// Number of (non-zero) parts.
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// i-th part, or 0 past the end (Young diagram padding).
  Part at_or_zero(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
  Part operator[](std::size_t i) const { return parts_[i]; }
  Part largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  int multiplicity(Part value) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
  }

  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Part> parts_;
  int total_ = 0;
};

/// Strict weak order for ordered containers. Descending lexicographic on
/// the part lists, so iteration order matches `enumerate_partitions`.
/// Not the dominance order.
struct PartitionOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), std::greater<>());
  }
};

inline Partition make_partition(std::span<const int> raw) {
  return Partition(std::vector<int>(raw.begin(), raw.end()));
}

/// Comma form, e.g. `3,3,2`. The empty partition prints as an empty string.
inline std::string to_string(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

/// Exponent form, e.g. `[3^2 2]`, for human-facing messages.
inline std::string to_exponent_string(const Partition& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.length();) {
    std::size_t j = i;
    while (j < p.length() && p[j] == p[i]) ++j;
    if (i) os << ' ';
    os << p[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  os << ']';
  return os.str();
}

namespace detail {

inline int parse_int(std::string_view s, std::string_view whole) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc() || ptr != last) {
    throw InvalidPartition("cannot parse '" + std::string(s) + "' in partition '" +
                           std::string(whole) + "'");
  }
  return value;
}

}  // namespace detail

/// Parses the comma form with optional exponent sugar: `3^2,1^3` is
/// `3,3,1,1,1`. An empty string is the empty partition.
inline Partition parse_partition(std::string_view text) {
  std::vector<int> raw;
  std::string_view rest = text;
  while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  if (rest.empty()) return {};
  while (true) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    auto caret = item.find('^');
    int value = detail::parse_int(item.substr(0, caret), text);
    int count = 1;
    if (caret != std::string_view::npos) {
      count = detail::parse_int(item.substr(caret + 1), text);
      if (count < 0) throw InvalidPartition("negative exponent in '" + std::string(text) + "'");
    }
    if (value < 0) throw InvalidPartition("negative part " + std::to_string(value));
    raw.insert(raw.end(), static_cast<std::size_t>(count), value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return Partition(std::move(raw));
}

/// Column lengths of the Young diagram.
inline Partition transpose(const Partition& p) {
  std::vector<int> cols(static_cast<std::size_t>(p.largest()), 0);
  for (int row : p) {
    for (int j = 0; j < row; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

namespace detail {

inline void require_same_total(const Partition& p, const Partition& q, std::string_view what) {
  if (p.total() != q.total()) {
    throw SizeMismatch(std::string(what) + " compares partitions of different totals (" +
                       std::to_string(p.total()) + " vs " + std::to_string(q.total()) + ")");
  }
}

}  // namespace detail

/// p <= q in the dominance order. Both must have the same total.
inline bool dominance_leq(const Partition& p, const Partition& q) {
  detail::require_same_total(p, q, "dominance");
  int sp = 0;
  int sq = 0;
  std::size_t n = std::max(p.length(), q.length());
  for (std::size_t i = 0; i < n; ++i) {
    sp += p.at_or_zero(i);
    sq += q.at_or_zero(i);
    if (sp > sq) return false;
  }
  return true;
}

/// Same-total lexicographic comparison of the part lists (zero padded).
inline std::strong_ordering lex_cmp(const Partition& p, const Partition& q) {
  detail::require_same_total(p, q, "lexicographic order");
  std::size_t n = std::max(p.length(), q.length());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = p.at_or_zero(i) <=> q.at_or_zero(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

/// Index-wise (row-wise) sum.
inline Partition add_rowwise(std::span<const Partition> summands) {
  std::vector<int> rows;
  for (const auto& s : summands) {
    if (rows.size() < s.length()) rows.resize(s.length(), 0);
    for (std::size_t i = 0; i < s.length(); ++i) rows[i] += s[i];
  }
  return Partition(std::move(rows));
}

inline Partition add_rowwise(std::initializer_list<Partition> summands) {
  return add_rowwise(std::span<const Partition>(summands.begin(), summands.size()));
}

/// Removes one box from the smallest part.
inline Partition decrement_smallest(const Partition& q) {
  if (q.empty()) throw InvalidPartition("decrement_smallest of the empty partition");
  std::vector<int> raw = q.vec();
  --raw.back();
  return Partition(std::move(raw));
}

/// Adds one box to the largest part (the empty partition becomes [1]).
inline Partition increment_largest(const Partition& q) {
  std::vector<int> raw = q.vec();
  if (raw.empty()) raw.push_back(0);
  ++raw.front();
  return Partition(std::move(raw));
}

/// `k` copies of `value`, as a building block for closed-form families.
inline Partition repeated(int value, int k) {
  return Partition(std::vector<int>(static_cast<std::size_t>(std::max(k, 0)), value));
}

/// Concatenates part lists (multiset union).
inline Partition concat(std::initializer_list<Partition> pieces) {
  std::vector<int> raw;
  for (const auto& p : pieces) raw.insert(raw.end(), p.begin(), p.end());
  return Partition(std::move(raw));
}

inline constexpr int kDefaultEnumerationCap = 40;

/// All partitions of n, in descending lexicographic order.
inline std::vector<Partition> enumerate_partitions(int n, int cap = kDefaultEnumerationCap) {
  if (n < 0) throw InvalidPartition("cannot enumerate partitions of a negative integer");
  if (n > cap) {
    throw CapExceeded("enumeration of partitions of " + std::to_string(n) +
                      " exceeds the cap " + std::to_string(cap));
  }
  std::vector<Partition> out;
  std::vector<int> current;
  // Depth-first, largest first part first.
  std::function<void(int, int)> recurse = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      recurse(remaining - part, part);
      current.pop_back();
    }
  };
  recurse(n, n);
  return out;
}

/// Raised when a dominance extremum that should be a single partition is
/// attained by several incomparable partitions, or by none. Carries every
/// extremal candidate found.
class NonUniqueExtremum : public InvariantViolation {
 public:
  NonUniqueExtremum(const std::string& what, std::vector<Partition> extrema)
      : InvariantViolation(what), extrema_(std::move(extrema)) {}
  const std::vector<Partition>& extrema() const noexcept { return extrema_; }

 private:
  std::vector<Partition> extrema_;
};

}  // namespace nilorbit

#endif  // NILORBIT_PARTITION_HPP
