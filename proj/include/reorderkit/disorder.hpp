#pragma once

// Shuffled-up-sequences (SUS) via the greedy list algorithm, and an
// independent longest-decreasing-subsequence (LDS) computation.

#include <cstddef>
#include <vector>

#include "reorderkit/core.hpp"

namespace reorderkit {

/// Ascending lists L_1..L_u produced by the greedy algorithm; u = SUS = LDS.
struct SusPartition {
  std::vector<std::vector<PacketId>> lists;

  std::size_t u() const noexcept { return lists.size(); }
  friend bool operator==(const SusPartition&, const SusPartition&) = default;
};

/// Feeds elements one at a time. Each element goes to the first list (in
/// creation order) whose last element is smaller, or opens a new list.
///
/// The last elements of L_1, L_2, ... are strictly decreasing at every step,
/// so the first admissible list is found by binary search.
class SusBuilder {
 public:
  void push(PacketId x);

  const SusPartition& partition() const noexcept { return partition_; }
  SusPartition take() && { return std::move(partition_); }
  std::size_t u() const noexcept { return partition_.u(); }

 private:
  SusPartition partition_;
  std::vector<PacketId> tails_;
};

SusPartition sus_greedy(const IdSequence& a);

/// SUS(a) without materialising the lists.
std::size_t sus(const IdSequence& a);

/// Longest strictly decreasing subsequence by quadratic DP over positions.
std::size_t lds_bruteforce(const IdSequence& a);

}  // namespace reorderkit
