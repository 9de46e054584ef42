#pragma once

// Exhaustive verification over all permutations of small length.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reorderkit/core.hpp"

namespace reorderkit {

struct ClassStats {
  std::size_t class_count = 0;
  std::size_t max_class_size = 0;
  /// Classes with at least two members.
  std::size_t multi_member_classes = 0;
  /// Classes with at least two members of SUS <= 3. Zero whenever uniqueness holds.
  std::size_t low_sus_collisions = 0;

  friend bool operator==(const ClassStats&, const ClassStats&) = default;
};

/// S_n grouped by buffer sequence. Keys and members are in lexicographic order.
struct EquivalenceClassReport {
  std::size_t n = 0;
  std::map<BufferSequence, std::vector<Permutation>> classes;
  ClassStats stats;
};

/// 1 <= n <= 9.
EquivalenceClassReport enumerate_classes(std::size_t n);

/// Two distinct SUS <= 3 permutations sharing a buffer sequence.
struct TheoremWitness {
  Permutation first;
  Permutation second;
};

struct TheoremCheck {
  std::size_t n = 0;
  std::optional<TheoremWitness> witness;

  bool passed() const noexcept { return !witness.has_value(); }
};

/// Passes iff no two distinct permutations of length n with SUS <= 3 share a
/// buffer sequence; otherwise reports the lexicographically smallest pair.
/// 1 <= n <= 9.
TheoremCheck verify_theorem(std::size_t n);

struct IdentityViolation {
  Permutation permutation;
  /// Which identity failed: "largest-seen", "sus-lds", "reconstruct", "ack-from-buffer".
  std::string identity;
  std::string detail;
};

struct IdentityCheck {
  std::size_t n = 0;
  std::optional<IdentityViolation> violation;

  bool passed() const noexcept { return !violation.has_value(); }
};

inline constexpr std::size_t kMaxIdentityLength = 7;

/// For every permutation of length n (1 <= n <= 7), checks in turn:
///   - largest ID seen so far == ACK_i + M_i - 1 at every step;
///   - greedy SUS == brute-force LDS;
///   - reconstruct(map_m(a)) == a when SUS(a) <= 3;
///   - ack_from_buffer(map_m(a)) == ack_sequence(a).
/// Stops at the first violation in lexicographic order.
IdentityCheck verify_identities(std::size_t n);

}  // namespace reorderkit
