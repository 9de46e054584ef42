#include "reorderkit/oracle.hpp"

#include <algorithm>
#include <tuple>

#include "reorderkit/disorder.hpp"
#include "reorderkit/metrics.hpp"
#include "reorderkit/reconstruct.hpp"

namespace reorderkit {

EquivalenceClassReport enumerate_classes(std::size_t n) {
  detail::check_enumeration_length(n, kMaxEnumerationLength);
  EquivalenceClassReport report;
  report.n = n;
  for (auto& p : all_permutations(n)) {
    auto key = map_m(p);
    report.classes[std::move(key)].push_back(std::move(p));
  }

  auto& stats = report.stats;
  stats.class_count = report.classes.size();
  for (const auto& [key, members] : report.classes) {
    stats.max_class_size = std::max(stats.max_class_size, members.size());
    if (members.size() < 2) continue;
    ++stats.multi_member_classes;
    const auto low = std::count_if(members.begin(), members.end(),
                                   [](const Permutation& p) { return sus(p) <= 3; });
    if (low >= 2) ++stats.low_sus_collisions;
  }
  return report;
}

TheoremCheck verify_theorem(std::size_t n) {
  detail::check_enumeration_length(n, kMaxEnumerationLength);
  // Lexicographic enumeration: the first SUS <= 3 member stored per key is the
  // smallest, so each collision is (smallest, later member).
  std::map<BufferSequence, Permutation> first_low;
  TheoremCheck check{n, std::nullopt};
  for (auto& p : all_permutations(n)) {
    if (sus(p) > 3) continue;
    auto key = map_m(p);
    auto it = first_low.find(key);
    if (it == first_low.end()) {
      first_low.emplace(std::move(key), std::move(p));
      continue;
    }
    if (!check.witness || std::tie(it->second, p) < std::tie(check.witness->first,
                                                                check.witness->second)) {
      check.witness = TheoremWitness{it->second, p};
    }
  }
  return check;
}

namespace {

std::string join(const std::vector<PacketId>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

std::optional<IdentityViolation> check_one(const Permutation& p) {
  const auto m = map_m(p);
  const auto ack = ack_sequence(p);

  PacketId largest = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    largest = std::max(largest, p[i]);
    if (largest != ack.values[i] + m.values[i] - 1) {
      return IdentityViolation{p, "largest-seen",
                               "step " + std::to_string(i + 1) + ": largest " +
                                   std::to_string(largest) + " != ACK + M - 1"};
    }
  }

  const auto greedy = sus_greedy(p).u();
  const auto lds = lds_bruteforce(p);
  if (greedy != lds) {
    return IdentityViolation{p, "sus-lds",
                             "greedy " + std::to_string(greedy) + " != lds " + std::to_string(lds)};
  }

  if (greedy <= 3) {
    const auto back = reconstruct(m);
    if (!back || *back != p) {
      return IdentityViolation{
          p, "reconstruct",
          back ? "reconstructed " + join(back->values()) : std::string("no preimage found")};
    }
  }

  const auto derived = ack_from_buffer(m);
  if (derived != ack) {
    return IdentityViolation{p, "ack-from-buffer",
                             "derived " + join(derived.values) + " != " + join(ack.values)};
  }
  return std::nullopt;
}

}  // namespace

IdentityCheck verify_identities(std::size_t n) {
  detail::check_enumeration_length(n, kMaxIdentityLength);
  IdentityCheck check{n, std::nullopt};
  for (const auto& p : all_permutations(n)) {
    if (auto violation = check_one(p)) {
      check.violation = std::move(violation);
      break;
    }
  }
  return check;
}

}  // namespace reorderkit
