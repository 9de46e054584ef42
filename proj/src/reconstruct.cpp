#include "reorderkit/reconstruct.hpp"

#include <unordered_set>

#include "reorderkit/disorder.hpp"

namespace reorderkit {

ReconstructionTrace reconstruction_phases(const BufferSequence& w) {
  const auto n = w.size();
  ReconstructionTrace trace;
  trace.packet.assign(n, ReconstructionTrace::kUnassigned);
  trace.ack.assign(n, 0);

  PacketId ack = 1;
  std::uint64_t prev = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto cur = w.values[i];
    if (cur < prev) {
      trace.packet[i] = ack;
      ack += prev - cur;
      trace.phase1_positions.push_back(i + 1);
    } else if (cur > prev) {
      // Largest ID so far is ack + prev - 1; the new one exceeds it by cur - prev.
      trace.packet[i] = ack + cur - 1;
      trace.phase1_positions.push_back(i + 1);
    } else {
      if (cur == 0) ++ack;
      trace.phase2_positions.push_back(i + 1);
    }
    trace.ack[i] = ack;
    prev = cur;
  }

  std::unordered_set<PacketId> used;
  used.reserve(n);
  for (auto id : trace.packet) {
    if (id != ReconstructionTrace::kUnassigned) used.insert(id);
  }
  PacketId smallest_free = 1;
  for (auto position : trace.phase2_positions) {
    while (used.contains(smallest_free)) ++smallest_free;
    trace.packet[position - 1] = smallest_free;
    used.insert(smallest_free);
  }
  return trace;
}

std::optional<Permutation> reconstruct(const BufferSequence& w) {
  auto trace = reconstruction_phases(w);
  if (!Permutation::is_permutation(trace.packet)) return std::nullopt;
  Permutation candidate(std::move(trace.packet));
  if (map_m(candidate) != w || sus(candidate) > 3) return std::nullopt;
  return candidate;
}

}  // namespace reorderkit
