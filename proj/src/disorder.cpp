#include "reorderkit/disorder.hpp"

#include <algorithm>

namespace reorderkit {

namespace {

// Index of the first list whose tail is below x, given strictly decreasing tails.
std::size_t first_extendable(const std::vector<PacketId>& tails, PacketId x) {
  auto it = std::partition_point(tails.begin(), tails.end(),
                                 [x](PacketId tail) { return tail > x; });
  return static_cast<std::size_t>(it - tails.begin());
}

}  // namespace

void SusBuilder::push(PacketId x) {
  const auto j = first_extendable(tails_, x);
  if (j == tails_.size()) {
    tails_.push_back(x);
    partition_.lists.push_back({x});
  } else {
    tails_[j] = x;
    partition_.lists[j].push_back(x);
  }
}

SusPartition sus_greedy(const IdSequence& a) {
  SusBuilder builder;
  for (auto x : a) builder.push(x);
  return std::move(builder).take();
}

std::size_t sus(const IdSequence& a) {
  std::vector<PacketId> tails;
  for (auto x : a) {
    const auto j = first_extendable(tails, x);
    if (j == tails.size()) {
      tails.push_back(x);
    } else {
      tails[j] = x;
    }
  }
  return tails.size();
}

std::size_t lds_bruteforce(const IdSequence& a) {
  const auto n = a.size();
  // ending[i]: longest decreasing subsequence ending at position i.
  std::vector<std::size_t> ending(n, 1);
  std::size_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (a[j] > a[i]) ending[i] = std::max(ending[i], ending[j] + 1);
    }
    best = std::max(best, ending[i]);
  }
  return best;
}

}  // namespace reorderkit
