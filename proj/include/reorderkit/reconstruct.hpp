#pragma once

// Inverse of the buffer-size mapping restricted to permutations with SUS <= 3.
// Within that class the preimage of a buffer sequence is unique, so the
// reconstruction either yields it or proves that none exists.

#include <cstddef>
#include <optional>
#include <vector>

#include "reorderkit/core.hpp"

namespace reorderkit {

/// Intermediate state of the two assignment phases, before verification.
struct ReconstructionTrace {
  static constexpr PacketId kUnassigned = 0;

  /// Assigned ID per position (kUnassigned only between the phases).
  std::vector<PacketId> packet;
  std::vector<PacketId> ack;
  /// 1-based positions with w_i != w_{i-1}.
  std::vector<std::size_t> phase1_positions;
  /// 1-based positions with w_i == w_{i-1}.
  std::vector<std::size_t> phase2_positions;
};

/// Runs both assignment phases on `w` (w_0 = 0, ACK_0 = 1) without checking
/// the outcome.
///
/// Phase 1, left to right:
///   - shrink (w_i < w_{i-1}): the packet is ACK_{i-1}; ACK advances by the shrink.
///   - growth (w_i > w_{i-1}): the packet is the new maximum, ACK_{i-1} + w_i - 1.
///   - flat: deferred; ACK advances by one only when the buffer is empty.
/// Phase 2 fills each deferred position, left to right, with the smallest
/// positive ID not assigned anywhere yet.
ReconstructionTrace reconstruction_phases(const BufferSequence& w);

/// The unique permutation p with SUS(p) <= 3 and map_m(p) == w, or nullopt
/// when no such permutation exists. Empty input yields the empty permutation.
std::optional<Permutation> reconstruct(const BufferSequence& w);

}  // namespace reorderkit
