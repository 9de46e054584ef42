// Acceptance suite: one line of output per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <sys/wait.h>

#include "reorderkit/core.hpp"
#include "reorderkit/disorder.hpp"
#include "reorderkit/metrics.hpp"
#include "reorderkit/oracle.hpp"
#include "reorderkit/reconstruct.hpp"
#include "support/naive.hpp"

using namespace reorderkit;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

using Counts = std::map<std::int64_t, std::uint64_t>;

void worked_examples() {
  expect(map_m(IdSequence{4, 3, 2, 1}).values == std::vector<std::uint64_t>{4, 4, 4, 0},
         "map_m(4 3 2 1)");
  expect(ack_sequence(IdSequence{4, 3, 2, 1}).values == std::vector<PacketId>{1, 1, 1, 5},
         "ack_sequence(4 3 2 1)");

  const auto part = sus_greedy(IdSequence{6, 5, 8, 7, 10, 9, 12, 11, 4, 3, 2});
  expect(part.u() == 5, "SUS of the 11-element example");
  expect(part.lists == std::vector<std::vector<PacketId>>{{6, 8, 10, 12}, {5, 7, 9, 11}, {4}, {3}, {2}},
         "SUS lists of the 11-element example");

  const auto seg = segment_episodes(IdSequence{1, 2, 3, 6, 5, 7, 4, 8, 9, 10, 12, 13, 14, 11});
  expect(seg.pivot_ids == std::vector<PacketId>{1, 2, 3, 4, 8, 9, 10, 11}, "pivot packets");

  const auto inf = Threshold::infinite();
  const auto ra = reorder_density({4, 3, 2, 1}, inf);
  const auto rb = reorder_density({4, 2, 3, 1}, inf);
  expect(ra.total == 4 && ra.counts == Counts{{-3, 1}, {-1, 1}, {1, 1}, {3, 1}}, "RD of 4 3 2 1");
  expect(rb.total == 4 && rb.counts == Counts{{-3, 1}, {0, 2}, {3, 1}}, "RD of 4 2 3 1");
}

void theorem_desk_scale() {
  for (std::size_t n = 1; n <= 8; ++n) {
    expect(verify_theorem(n).passed(), "verify_theorem(" + std::to_string(n) + ")");
  }
}

void sharpness() {
  const auto report = enumerate_classes(4);
  const auto it = report.classes.find(BufferSequence{{4, 4, 4, 0}});
  expect(it != report.classes.end(), "class (4 4 4 0) exists");
  expect(it->second == std::vector<Permutation>{{4, 2, 3, 1}, {4, 3, 2, 1}},
         "class (4 4 4 0) = {4 2 3 1, 4 3 2 1}");
  expect(sus(Permutation{4, 3, 2, 1}) == 4 && sus(Permutation{4, 2, 3, 1}) == 3,
         "SUS values 4 and 3");
}

void round_trip() {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& p : all_permutations(n)) {
      if (sus(p) > 3) continue;
      expect(reconstruct(map_m(p)) == p, "exhaustive round trip at n=" + std::to_string(n));
    }
  }
  std::mt19937_64 rng(0xACCE55);
  for (int trial = 0; trial < 1000; ++trial) {
    const Permutation p(naive::random_sus3_permutation(100, rng));
    expect(sus(p) <= 3, "generator yields SUS <= 3");
    expect(reconstruct(map_m(p)) == p, "random length-100 round trip");
  }
}

void greedy_correctness() {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& p : all_permutations(n)) {
      expect(sus_greedy(p).u() == lds_bruteforce(p), "greedy == LDS exhaustively");
    }
  }
  std::mt19937_64 rng(0x5115);
  for (int trial = 0; trial < 1000; ++trial) {
    const IdSequence a(naive::random_permutation(1 + rng() % 64, rng));
    expect(sus_greedy(a).u() == lds_bruteforce(a), "greedy == LDS on random permutations");
  }
}

void behavioral_equivalence() {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& p : all_permutations(n)) {
      expect(ack_from_buffer(map_m(p)) == ack_sequence(p), "ack_from_buffer . map_m == ack");
    }
    for (const auto& [key, members] : enumerate_classes(n).classes) {
      for (std::size_t k = 1; k < members.size(); ++k) {
        expect(behaviorally_equivalent(members[0], members[k]),
               "FB-equivalent pair is behaviorally equivalent");
      }
    }
  }
}

void rd_inconsistency() {
  for (auto dt : {Threshold::finite(1), Threshold::finite(2), Threshold::finite(3),
                  Threshold::infinite()}) {
    const auto r =
        is_consistent_on([dt](const Permutation& p) { return reorder_density(p, dt); }, 4);
    expect(!r.consistent(), "RD inconsistent at dt=" + dt.to_string());
    const auto& c = *r.counterexample;
    expect(c.first != c.second && map_m(c.first) == map_m(c.second) &&
               reorder_density(c.first, dt) != reorder_density(c.second, dt),
           "counterexample is an equal-image pair with differing RD");
  }
  const auto mean_m = [](const Permutation& p) {
    const auto m = map_m(p);
    // Exact mean as (sum, n); n is fixed within one scan.
    return std::accumulate(m.values.begin(), m.values.end(), std::uint64_t{0});
  };
  for (std::size_t n = 1; n <= 6; ++n) {
    expect(is_consistent_on(mean_m, n).consistent(), "mean M consistent at n=" + std::to_string(n));
  }
}

struct Process {
  int code;
  std::string out;
};

Process shell(const std::string& command) {
  Process p{-1, {}};
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return p;
  char buf[256];
  while (auto got = std::fread(buf, 1, sizeof buf, pipe)) p.out.append(buf, got);
  const int status = pclose(pipe);
  p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

void cli_contract() {
  const std::string cli = REORDERKIT_CLI_PATH;
  const std::string trace = REORDERKIT_EXAMPLE_TRACE;

  auto r = shell("'" + cli + "' reconstruct '4 4 4 0' 2>/dev/null");
  expect(r.out == "4 2 3 1\n" && r.code == 0, "reconstruct '4 4 4 0' -> 4 2 3 1, exit 0");
  r = shell("'" + cli + "' reconstruct 1 2>/dev/null");
  expect(r.out == "NO PERMUTATION EXISTS\n" && r.code == 1,
         "reconstruct 1 -> NO PERMUTATION EXISTS, exit 1");
  r = shell("'" + cli + "' consistency --metric rd --dt inf --n 4 2>/dev/null");
  expect(r.code == 1 && r.out.find("4 3 2 1") != std::string::npos &&
             r.out.find("4 2 3 1") != std::string::npos,
         "consistency rd inf n=4 names both permutations, exit 1");

  r = shell("'" + cli + "' map '" + trace + "' | '" + cli + "' reconstruct - 2>/dev/null");
  expect(r.code == 0 && r.out == "1 2 3 6 5 7 4 8 9 10 12 13 14 11\n",
         "map | reconstruct round-trips the 14-element trace");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria{
      {"AC1 worked examples exact", worked_examples},
      {"AC2 uniqueness for SUS<=3, n=1..8", theorem_desk_scale},
      {"AC3 sharpness: (4 4 4 0) class", sharpness},
      {"AC4 reconstruct(map_m(a)) == a", round_trip},
      {"AC5 greedy SUS == LDS", greedy_correctness},
      {"AC6 FB-equivalence implies behavioral equivalence", behavioral_equivalence},
      {"AC7 RD inconsistent for every DT; mean M consistent", rd_inconsistency},
      {"AC8 CLI contract", cli_contract},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      check();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << " (" << ms << " ms)";
    if (!ok) std::cout << ": " << detail;
    std::cout << '\n';
    failed += ok ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << '/' << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
