#pragma once

// Reordering metrics: reorder density (RD), the RcvWindow series, and a
// checker for whether an arbitrary metric is constant on FB-equivalence classes.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reorderkit/core.hpp"

namespace reorderkit {

/// RD truncation threshold DT: a positive integer or infinity.
class Threshold {
 public:
  /// Throws InvalidParameter when dt <= 0.
  static Threshold finite(std::int64_t dt);
  static Threshold infinite() noexcept { return Threshold(); }
  /// Accepts a positive decimal integer or "inf".
  static Threshold parse(const std::string& text);

  bool is_infinite() const noexcept { return !bound_.has_value(); }
  std::optional<std::int64_t> bound() const noexcept { return bound_; }
  bool admits(std::int64_t displacement) const noexcept;
  std::string to_string() const;

  friend bool operator==(const Threshold&, const Threshold&) = default;

 private:
  Threshold() = default;
  std::optional<std::int64_t> bound_;
};

/// Exact counts of displacements p[i] - i (1-based i) within [-dt, dt].
struct DisplacementDistribution {
  std::map<std::int64_t, std::uint64_t> counts;
  std::uint64_t total = 0;
  Threshold dt = Threshold::infinite();

  friend bool operator==(const DisplacementDistribution&,
                         const DisplacementDistribution&) = default;
};

DisplacementDistribution reorder_density(const Permutation& p, Threshold dt);

struct RcvWindowSeries {
  std::uint64_t rcv_buffer = 0;
  /// rcv_buffer - M_i.
  std::vector<std::uint64_t> values;

  friend bool operator==(const RcvWindowSeries&, const RcvWindowSeries&) = default;
};

/// Throws InvalidParameter for rcv_buffer == 0 and CapacityExceeded at the
/// first position where M_i > rcv_buffer.
RcvWindowSeries rcv_window_series(const IdSequence& a, std::uint64_t rcv_buffer);

/// Pair of FB-equivalent permutations on which a metric disagrees.
struct Counterexample {
  Permutation first;
  Permutation second;
  BufferSequence image;
};

struct ConsistencyResult {
  std::size_t n = 0;
  std::optional<Counterexample> counterexample;

  bool consistent() const noexcept { return !counterexample.has_value(); }
};

inline constexpr std::size_t kMaxEnumerationLength = 9;

namespace detail {
void check_enumeration_length(std::size_t n, std::size_t max_n);
}

/// Enumerates S_n in lexicographic order, groups it by map_m image, and
/// reports the lexicographically smallest pair (first < second) with equal
/// images but different metric values. 1 <= n <= 9.
template <typename Metric>
  requires std::invocable<Metric&, const Permutation&> &&
           std::equality_comparable<std::invoke_result_t<Metric&, const Permutation&>>
ConsistencyResult is_consistent_on(Metric&& metric, std::size_t n) {
  detail::check_enumeration_length(n, kMaxEnumerationLength);
  using Value = std::invoke_result_t<Metric&, const Permutation&>;

  const auto perms = all_permutations(n);
  std::vector<Value> values;
  values.reserve(perms.size());
  std::map<BufferSequence, std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < perms.size(); ++k) {
    values.push_back(std::invoke(metric, perms[k]));
    classes[map_m(perms[k])].push_back(k);
  }

  ConsistencyResult result{n, std::nullopt};
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (const auto& [image, members] : classes) {
    // Members are in lexicographic order; the smallest `first` with any
    // disagreeing partner wins inside the class.
    for (std::size_t x = 0; x < members.size(); ++x) {
      std::optional<std::size_t> partner;
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        if (!(values[members[x]] == values[members[y]])) {
          partner = members[y];
          break;
        }
      }
      if (partner) {
        const std::pair candidate{members[x], *partner};
        if (!best || candidate < *best) {
          best = candidate;
          result.counterexample = Counterexample{perms[candidate.first],
                                                 perms[candidate.second], image};
        }
        break;
      }
    }
  }
  return result;
}

}  // namespace reorderkit
