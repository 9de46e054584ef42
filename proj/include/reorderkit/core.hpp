#pragma once

// Packet-sequence types and the receiver-side mappings: buffer sizes (M),
// cumulative ACKs, equivalence predicates and O/U episode segmentation.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <unordered_set>
#include <vector>

#include "reorderkit/errors.hpp"

namespace reorderkit {

using PacketId = std::uint64_t;

/// Finite sequence of distinct, strictly positive packet IDs in arrival order.
/// Gaps (lost packets) are allowed; repeats are not.
class IdSequence {
 public:
  IdSequence() = default;

  /// Throws InvalidInput naming the first offending 1-based position.
  explicit IdSequence(std::vector<PacketId> ids);
  IdSequence(std::initializer_list<PacketId> ids)
      : IdSequence(std::vector<PacketId>(ids)) {}

  std::span<const PacketId> ids() const noexcept { return ids_; }
  const std::vector<PacketId>& values() const noexcept { return ids_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  PacketId operator[](std::size_t i) const { return ids_[i]; }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }

  friend bool operator==(const IdSequence&, const IdSequence&) = default;
  friend auto operator<=>(const IdSequence&, const IdSequence&) = default;

 private:
  std::vector<PacketId> ids_;
};

/// An IdSequence whose IDs are exactly {1, ..., n}.
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidInput if `seq` is not a rearrangement of 1..n.
  explicit Permutation(IdSequence seq);
  explicit Permutation(std::vector<PacketId> ids) : Permutation(IdSequence(std::move(ids))) {}
  Permutation(std::initializer_list<PacketId> ids)
      : Permutation(std::vector<PacketId>(ids)) {}

  static bool is_permutation(std::span<const PacketId> ids);

  const IdSequence& sequence() const noexcept { return seq_; }
  operator const IdSequence&() const noexcept { return seq_; }  // NOLINT(google-explicit-constructor)
  const std::vector<PacketId>& values() const noexcept { return seq_.values(); }
  std::size_t size() const noexcept { return seq_.size(); }
  PacketId operator[](std::size_t i) const { return seq_[i]; }
  auto begin() const noexcept { return seq_.begin(); }
  auto end() const noexcept { return seq_.end(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  IdSequence seq_;
};

/// Incremental receiver: tracks the highest ID seen (H) and the uploadable
/// prefix (L, the largest L with 1..L all received).
class ReceiverState {
 public:
  /// Records an arrival. Throws InvalidInput (position 0) on a zero or
  /// already-received ID; IdSequence callers never trigger this.
  void receive(PacketId id);

  PacketId highest_seen() const noexcept { return highest_; }
  PacketId uploadable() const noexcept { return uploadable_; }
  PacketId next_expected() const noexcept { return uploadable_ + 1; }
  std::uint64_t buffer_size() const noexcept { return highest_ - uploadable_; }
  bool has_received(PacketId id) const;

 private:
  PacketId highest_ = 0;
  PacketId uploadable_ = 0;
  // Received IDs above the uploadable prefix.
  std::unordered_set<PacketId> buffered_;
};

/// Time series of minimal buffer sizes M_i = H_i - L_i.
struct BufferSequence {
  std::vector<std::uint64_t> values;

  std::size_t size() const noexcept { return values.size(); }
  friend bool operator==(const BufferSequence&, const BufferSequence&) = default;
  friend auto operator<=>(const BufferSequence&, const BufferSequence&) = default;
};

/// Time series of cumulative acknowledgments ACK_i = L_i + 1.
struct AckSequence {
  std::vector<PacketId> values;

  std::size_t size() const noexcept { return values.size(); }
  friend bool operator==(const AckSequence&, const AckSequence&) = default;
  friend auto operator<=>(const AckSequence&, const AckSequence&) = default;
};

enum class EpisodeState : char { Ordered = 'O', Unordered = 'U' };

/// Maximal run of positions sharing a state; `first`/`last` are 1-based, inclusive.
struct Episode {
  EpisodeState state;
  std::size_t first;
  std::size_t last;

  friend bool operator==(const Episode&, const Episode&) = default;
};

struct EpisodeSegmentation {
  std::vector<Episode> episodes;
  /// 1-based positions i with L_i > L_{i-1}.
  std::vector<std::size_t> pivot_positions;
  /// Packet IDs arriving at those positions.
  std::vector<PacketId> pivot_ids;
};

BufferSequence map_m(const IdSequence& a);
AckSequence ack_sequence(const IdSequence& a);

/// map_m(a) == map_m(b); sequences of different length are never equivalent.
bool fb_equivalent(const IdSequence& a, const IdSequence& b);
/// ack_sequence(a) == ack_sequence(b); different lengths compare false.
bool behaviorally_equivalent(const IdSequence& a, const IdSequence& b);

/// Recovers the ACK series from buffer sizes alone, with w_0 = 0 and ACK_0 = 1:
/// a shrink by k advances ACK by k, a zero-to-zero step advances it by one,
/// anything else leaves it unchanged. Feasibility of `w` is not checked.
AckSequence ack_from_buffer(const BufferSequence& w);

/// Position i is Ordered when M_{i-1} = M_i = 0 (M_0 = 0), Unordered otherwise;
/// equal neighbours are merged into one episode.
EpisodeSegmentation segment_episodes(const IdSequence& a);

/// Lexicographically ordered permutations of 1..n.
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace reorderkit
