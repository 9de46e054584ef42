#include "reorderkit/core.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace reorderkit {

IdSequence::IdSequence(std::vector<PacketId> ids) : ids_(std::move(ids)) {
  std::unordered_map<PacketId, std::size_t> first_seen;
  first_seen.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    const auto position = i + 1;
    if (ids_[i] == 0) {
      throw InvalidInput(position, "packet ID at position " + std::to_string(position) +
                                       " is not positive");
    }
    auto [it, inserted] = first_seen.emplace(ids_[i], position);
    if (!inserted) {
      throw InvalidInput(position, "packet ID " + std::to_string(ids_[i]) + " at position " +
                                       std::to_string(position) + " repeats position " +
                                       std::to_string(it->second));
    }
  }
}

bool Permutation::is_permutation(std::span<const PacketId> ids) {
  std::vector<bool> seen(ids.size() + 1, false);
  for (auto id : ids) {
    if (id == 0 || id > ids.size() || seen[id]) return false;
    seen[id] = true;
  }
  return true;
}

Permutation::Permutation(IdSequence seq) : seq_(std::move(seq)) {
  const auto n = seq_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (seq_[i] > n) {
      throw InvalidInput(i + 1, "packet ID " + std::to_string(seq_[i]) + " at position " +
                                    std::to_string(i + 1) + " exceeds length " +
                                    std::to_string(n) + "; not a permutation");
    }
  }
  // Distinct and bounded by n, hence exactly 1..n.
}

void ReceiverState::receive(PacketId id) {
  if (id == 0) throw InvalidInput(0, "packet ID must be positive");
  if (has_received(id)) {
    throw InvalidInput(0, "packet ID " + std::to_string(id) + " received twice");
  }
  highest_ = std::max(highest_, id);
  if (id != uploadable_ + 1) {
    buffered_.insert(id);
    return;
  }
  ++uploadable_;
  while (!buffered_.empty()) {
    auto it = buffered_.find(uploadable_ + 1);
    if (it == buffered_.end()) break;
    buffered_.erase(it);
    ++uploadable_;
  }
}

bool ReceiverState::has_received(PacketId id) const {
  return (id != 0 && id <= uploadable_) || buffered_.contains(id);
}

BufferSequence map_m(const IdSequence& a) {
  BufferSequence out;
  out.values.reserve(a.size());
  ReceiverState rx;
  for (auto id : a) {
    rx.receive(id);
    out.values.push_back(rx.buffer_size());
  }
  return out;
}

AckSequence ack_sequence(const IdSequence& a) {
  AckSequence out;
  out.values.reserve(a.size());
  ReceiverState rx;
  for (auto id : a) {
    rx.receive(id);
    out.values.push_back(rx.next_expected());
  }
  return out;
}

bool fb_equivalent(const IdSequence& a, const IdSequence& b) {
  return a.size() == b.size() && map_m(a) == map_m(b);
}

bool behaviorally_equivalent(const IdSequence& a, const IdSequence& b) {
  return a.size() == b.size() && ack_sequence(a) == ack_sequence(b);
}

AckSequence ack_from_buffer(const BufferSequence& w) {
  AckSequence out;
  out.values.reserve(w.size());
  PacketId ack = 1;
  std::uint64_t prev = 0;
  for (auto cur : w.values) {
    if (cur < prev) {
      ack += prev - cur;
    } else if (cur == 0 && prev == 0) {
      ++ack;
    }
    out.values.push_back(ack);
    prev = cur;
  }
  return out;
}

EpisodeSegmentation segment_episodes(const IdSequence& a) {
  EpisodeSegmentation seg;
  ReceiverState rx;
  std::uint64_t prev_m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto position = i + 1;
    const auto prev_l = rx.uploadable();
    rx.receive(a[i]);
    if (rx.uploadable() > prev_l) {
      seg.pivot_positions.push_back(position);
      seg.pivot_ids.push_back(a[i]);
    }
    const auto m = rx.buffer_size();
    const auto state = (m == 0 && prev_m == 0) ? EpisodeState::Ordered : EpisodeState::Unordered;
    if (!seg.episodes.empty() && seg.episodes.back().state == state) {
      seg.episodes.back().last = position;
    } else {
      seg.episodes.push_back({state, position, position});
    }
    prev_m = m;
  }
  return seg;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<PacketId> ids(n);
  std::iota(ids.begin(), ids.end(), PacketId{1});
  std::vector<Permutation> out;
  do {
    out.emplace_back(ids);
  } while (std::next_permutation(ids.begin(), ids.end()));
  return out;
}

}  // namespace reorderkit
