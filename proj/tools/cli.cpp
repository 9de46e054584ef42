#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>

#include "reorderkit/core.hpp"
#include "reorderkit/disorder.hpp"
#include "reorderkit/metrics.hpp"
#include "reorderkit/oracle.hpp"
#include "reorderkit/reconstruct.hpp"
#include "reorderkit/trace_io.hpp"

namespace reorderkit::cli {

namespace {

using nlohmann::json;

constexpr const char* kNoPermutation = "NO PERMUTATION EXISTS";

enum class Format { Text, Json, Csv };

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  Format format = Format::Text;
};

template <typename Range>
std::string join(const Range& values, const char* sep = " ") {
  std::string s;
  bool first = true;
  for (const auto& v : values) {
    if (!first) s += sep;
    s += std::to_string(v);
    first = false;
  }
  return s;
}

std::vector<std::uint64_t> load_one(const std::string& arg, std::istream& in) {
  if (looks_inline(arg)) return parse_inline(arg);
  return read_trace(arg, in).values;
}

// One trace: either inline integers spread over any number of arguments, or a single path.
std::vector<std::uint64_t> load_trace(const std::vector<std::string>& args, std::istream& in) {
  if (args.empty()) throw UsageError("expected a trace path, '-' or an inline sequence");
  const bool all_inline =
      std::all_of(args.begin(), args.end(), [](const std::string& a) { return looks_inline(a); });
  if (all_inline) {
    std::vector<std::uint64_t> values;
    for (const auto& a : args) {
      auto part = parse_inline(a);
      values.insert(values.end(), part.begin(), part.end());
    }
    return values;
  }
  if (args.size() != 1) throw UsageError("expected exactly one trace path");
  return read_trace(args.front(), in).values;
}

IdSequence to_ids(std::vector<std::uint64_t> values) { return IdSequence(std::move(values)); }

void print_values(const Context& ctx, const char* command, const std::vector<std::uint64_t>& values,
                  json extra = json::object()) {
  switch (ctx.format) {
    case Format::Text:
      ctx.out << join(values) << '\n';
      break;
    case Format::Json: {
      json j = std::move(extra);
      j["command"] = command;
      j["values"] = values;
      ctx.out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      ctx.out << "position,value\n";
      for (std::size_t i = 0; i < values.size(); ++i) {
        ctx.out << i + 1 << ',' << values[i] << '\n';
      }
      break;
  }
}

int cmd_map(const Context& ctx, const std::vector<std::string>& traces) {
  print_values(ctx, "map", map_m(to_ids(load_trace(traces, ctx.in))).values);
  return kOk;
}

int cmd_ack(const Context& ctx, const std::vector<std::string>& traces) {
  print_values(ctx, "ack", ack_sequence(to_ids(load_trace(traces, ctx.in))).values);
  return kOk;
}

int cmd_sus(const Context& ctx, const std::vector<std::string>& traces) {
  const auto partition = sus_greedy(to_ids(load_trace(traces, ctx.in)));
  switch (ctx.format) {
    case Format::Text:
      ctx.out << "sus " << partition.u() << '\n';
      for (std::size_t j = 0; j < partition.lists.size(); ++j) {
        ctx.out << 'L' << j + 1 << ' ' << join(partition.lists[j]) << '\n';
      }
      break;
    case Format::Json:
      ctx.out << json{{"command", "sus"}, {"sus", partition.u()}, {"lists", partition.lists}}.dump()
              << '\n';
      break;
    case Format::Csv:
      ctx.out << "list,value\n";
      for (std::size_t j = 0; j < partition.lists.size(); ++j) {
        for (auto v : partition.lists[j]) ctx.out << j + 1 << ',' << v << '\n';
      }
      break;
  }
  return kOk;
}

int cmd_episodes(const Context& ctx, const std::vector<std::string>& traces) {
  const auto seg = segment_episodes(to_ids(load_trace(traces, ctx.in)));
  const auto state = [](EpisodeState s) { return std::string(1, static_cast<char>(s)); };
  switch (ctx.format) {
    case Format::Text:
      for (const auto& e : seg.episodes) {
        ctx.out << state(e.state) << ' ' << e.first << '-' << e.last << '\n';
      }
      ctx.out << "pivot_positions " << join(seg.pivot_positions) << '\n';
      ctx.out << "pivot_ids " << join(seg.pivot_ids) << '\n';
      break;
    case Format::Json: {
      json episodes = json::array();
      for (const auto& e : seg.episodes) {
        episodes.push_back({{"state", state(e.state)}, {"first", e.first}, {"last", e.last}});
      }
      ctx.out << json{{"command", "episodes"},
                      {"episodes", episodes},
                      {"pivot_positions", seg.pivot_positions},
                      {"pivot_ids", seg.pivot_ids}}
                     .dump()
              << '\n';
      break;
    }
    case Format::Csv:
      ctx.out << "record,a,b,c\n";
      for (const auto& e : seg.episodes) {
        ctx.out << "episode," << state(e.state) << ',' << e.first << ',' << e.last << '\n';
      }
      for (std::size_t k = 0; k < seg.pivot_positions.size(); ++k) {
        ctx.out << "pivot," << seg.pivot_positions[k] << ',' << seg.pivot_ids[k] << ",\n";
      }
      break;
  }
  return kOk;
}

json threshold_json(const Threshold& dt) {
  if (dt.is_infinite()) return "inf";
  return *dt.bound();
}

int cmd_rd(const Context& ctx, const std::vector<std::string>& traces, const std::string& dt_text) {
  const auto dt = Threshold::parse(dt_text);
  const auto rd = reorder_density(Permutation(to_ids(load_trace(traces, ctx.in))), dt);
  switch (ctx.format) {
    case Format::Text:
      ctx.out << "dt " << dt.to_string() << '\n' << "total " << rd.total << '\n';
      for (const auto& [d, count] : rd.counts) {
        ctx.out << d << ' ' << count << '/' << rd.total << '\n';
      }
      break;
    case Format::Json: {
      json counts = json::array();
      for (const auto& [d, count] : rd.counts) {
        counts.push_back({{"displacement", d}, {"count", count}});
      }
      ctx.out << json{{"command", "rd"},
                      {"dt", threshold_json(dt)},
                      {"total", rd.total},
                      {"counts", counts}}
                     .dump()
              << '\n';
      break;
    }
    case Format::Csv:
      ctx.out << "displacement,count,total\n";
      for (const auto& [d, count] : rd.counts) {
        ctx.out << d << ',' << count << ',' << rd.total << '\n';
      }
      break;
  }
  return kOk;
}

int cmd_rcvwindow(const Context& ctx, const std::vector<std::string>& traces,
                  std::uint64_t rcv_buffer) {
  const auto series = rcv_window_series(to_ids(load_trace(traces, ctx.in)), rcv_buffer);
  print_values(ctx, "rcvwindow", series.values, json{{"rcv_buffer", rcv_buffer}});
  return kOk;
}

int cmd_equiv(const Context& ctx, const std::vector<std::string>& traces) {
  if (traces.size() != 2) throw UsageError("equiv expects exactly two traces");
  const auto a = to_ids(load_one(traces[0], ctx.in));
  const auto b = to_ids(load_one(traces[1], ctx.in));
  const bool fb = fb_equivalent(a, b);
  const bool behavioral = behaviorally_equivalent(a, b);
  switch (ctx.format) {
    case Format::Text:
      ctx.out << std::boolalpha << "fb_equivalent " << fb << '\n'
              << "behaviorally_equivalent " << behavioral << '\n'
              << std::noboolalpha;
      break;
    case Format::Json:
      ctx.out << json{{"command", "equiv"},
                      {"fb_equivalent", fb},
                      {"behaviorally_equivalent", behavioral}}
                     .dump()
              << '\n';
      break;
    case Format::Csv:
      ctx.out << "fb_equivalent,behaviorally_equivalent\n"
              << std::boolalpha << fb << ',' << behavioral << '\n'
              << std::noboolalpha;
      break;
  }
  return kOk;
}

int cmd_reconstruct(const Context& ctx, const std::vector<std::string>& traces) {
  const auto result = reconstruct(BufferSequence{load_trace(traces, ctx.in)});
  switch (ctx.format) {
    case Format::Text:
      ctx.out << (result ? join(result->values()) : std::string(kNoPermutation)) << '\n';
      break;
    case Format::Json: {
      json j{{"command", "reconstruct"}};
      if (result) {
        j["permutation"] = result->values();
      } else {
        j["permutation"] = nullptr;
        j["result"] = kNoPermutation;
      }
      ctx.out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      if (result) {
        ctx.out << "position,value\n";
        for (std::size_t i = 0; i < result->size(); ++i) {
          ctx.out << i + 1 << ',' << (*result)[i] << '\n';
        }
      } else {
        ctx.out << "result\n" << kNoPermutation << '\n';
      }
      break;
  }
  return result ? kOk : kNegative;
}

int cmd_verify(const Context& ctx, std::size_t n) {
  const auto theorem = verify_theorem(n);
  std::optional<IdentityCheck> identities;
  if (n <= kMaxIdentityLength) identities = verify_identities(n);

  const std::string theorem_result = theorem.passed() ? "pass" : "fail";
  const std::string identity_result =
      !identities ? "skipped" : (identities->passed() ? "pass" : "fail");

  switch (ctx.format) {
    case Format::Text:
      ctx.out << "theorem n=" << n << ": " << theorem_result;
      if (theorem.witness) {
        ctx.out << " (" << join(theorem.witness->first.values()) << " | "
                << join(theorem.witness->second.values()) << ')';
      }
      ctx.out << '\n' << "identities n=" << n << ": " << identity_result;
      if (!identities) {
        ctx.out << " (requires n <= " << kMaxIdentityLength << ')';
      } else if (identities->violation) {
        const auto& v = *identities->violation;
        ctx.out << " (" << v.identity << " on " << join(v.permutation.values()) << ": " << v.detail
                << ')';
      }
      ctx.out << '\n';
      break;
    case Format::Json: {
      json j{{"command", "verify"},
             {"n", n},
             {"theorem", theorem_result},
             {"identities", identity_result}};
      if (theorem.witness) {
        j["theorem_witness"] = {theorem.witness->first.values(), theorem.witness->second.values()};
      }
      if (identities && identities->violation) {
        const auto& v = *identities->violation;
        j["identity_violation"] = {{"identity", v.identity},
                                   {"permutation", v.permutation.values()},
                                   {"detail", v.detail}};
      }
      ctx.out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      ctx.out << "check,n,result\n"
              << "theorem," << n << ',' << theorem_result << '\n'
              << "identities," << n << ',' << identity_result << '\n';
      break;
  }
  const bool failed = !theorem.passed() || (identities && !identities->passed());
  return failed ? kNegative : kOk;
}

int cmd_consistency(const Context& ctx, const std::string& metric, const std::string& dt_text,
                    std::size_t n) {
  ConsistencyResult result;
  std::optional<Threshold> dt;
  if (metric == "rd") {
    if (dt_text.empty()) throw UsageError("--dt is required for --metric rd");
    dt = Threshold::parse(dt_text);
    result = is_consistent_on([&](const Permutation& p) { return reorder_density(p, *dt); }, n);
  } else {
    // Sum of M over a fixed length n is an exact stand-in for its mean.
    result = is_consistent_on(
        [](const Permutation& p) {
          const auto m = map_m(p);
          return std::accumulate(m.values.begin(), m.values.end(), std::uint64_t{0});
        },
        n);
  }

  switch (ctx.format) {
    case Format::Text:
      if (result.counterexample) {
        const auto& c = *result.counterexample;
        ctx.out << "inconsistent n=" << n << ": " << join(c.first.values()) << " and "
                << join(c.second.values()) << " share buffer sequence " << join(c.image.values)
                << '\n';
      } else {
        ctx.out << "consistent n=" << n << '\n';
      }
      break;
    case Format::Json: {
      json j{{"command", "consistency"},
             {"metric", metric},
             {"n", n},
             {"consistent", result.consistent()}};
      if (dt) j["dt"] = threshold_json(*dt);
      if (result.counterexample) {
        const auto& c = *result.counterexample;
        j["counterexample"] = {c.first.values(), c.second.values()};
        j["buffer"] = c.image.values;
      }
      ctx.out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      ctx.out << "n,consistent,first,second,buffer\n" << n << ','
              << (result.consistent() ? "true" : "false") << ',';
      if (result.counterexample) {
        const auto& c = *result.counterexample;
        ctx.out << join(c.first.values()) << ',' << join(c.second.values()) << ','
                << join(c.image.values);
      } else {
        ctx.out << ",,";
      }
      ctx.out << '\n';
      break;
  }
  return result.consistent() ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Packet reordering analysis: buffer sequences, SUS, reconstruction, metrics",
               "reorderkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  std::vector<std::string> traces;
  std::string dt_text;
  std::uint64_t rcv_buffer = 0;
  std::size_t n = 0;
  std::string metric = "rd";

  const auto with_traces = [&](CLI::App* sub, const char* what) {
    sub->add_option("traces", traces, what)->required();
    return sub;
  };
  auto* map = with_traces(app.add_subcommand("map", "Print the buffer sequence M"),
                          "Trace path, '-' for stdin, or inline IDs");
  auto* ack = with_traces(app.add_subcommand("ack", "Print the cumulative ACK sequence"),
                          "Trace path, '-' for stdin, or inline IDs");
  auto* sus_cmd = with_traces(app.add_subcommand("sus", "Greedy SUS partition"),
                              "Trace path, '-' for stdin, or inline IDs");
  auto* episodes = with_traces(app.add_subcommand("episodes", "O/U episodes and pivot packets"),
                               "Trace path, '-' for stdin, or inline IDs");
  auto* rd = with_traces(app.add_subcommand("rd", "Reorder density of a permutation"),
                         "Trace path, '-' for stdin, or inline IDs");
  rd->add_option("--dt", dt_text, "Displacement threshold: positive integer or 'inf'")->required();
  auto* rcv = with_traces(app.add_subcommand("rcvwindow", "RcvWindow = RcvBuffer - M series"),
                          "Trace path, '-' for stdin, or inline IDs");
  rcv->add_option("--rcv-buffer", rcv_buffer, "Receiver buffer capacity in packets")->required();
  auto* equiv = with_traces(app.add_subcommand("equiv", "FB and behavioral equivalence"),
                            "Two traces (paths, '-' or inline IDs)");
  auto* rec = with_traces(app.add_subcommand("reconstruct", "Unique SUS<=3 preimage of M"),
                          "Buffer sequence path, '-' for stdin, or inline values");
  auto* verify = app.add_subcommand("verify", "Exhaustive uniqueness and identity checks");
  verify->add_option("--n", n, "Permutation length")->required();
  auto* consistency = app.add_subcommand("consistency", "Is a metric constant on M-classes?");
  consistency->add_option("--metric", metric, "Metric to check")
      ->check(CLI::IsMember({"rd", "mean-m"}));
  consistency->add_option("--dt", dt_text, "Threshold for rd: positive integer or 'inf'");
  consistency->add_option("--n", n, "Permutation length")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadInput;
  }

  Context ctx{in, out};
  if (format == "json") ctx.format = Format::Json;
  if (format == "csv") ctx.format = Format::Csv;

  try {
    if (map->parsed()) return cmd_map(ctx, traces);
    if (ack->parsed()) return cmd_ack(ctx, traces);
    if (sus_cmd->parsed()) return cmd_sus(ctx, traces);
    if (episodes->parsed()) return cmd_episodes(ctx, traces);
    if (rd->parsed()) return cmd_rd(ctx, traces, dt_text);
    if (rcv->parsed()) return cmd_rcvwindow(ctx, traces, rcv_buffer);
    if (equiv->parsed()) return cmd_equiv(ctx, traces);
    if (rec->parsed()) return cmd_reconstruct(ctx, traces);
    if (verify->parsed()) return cmd_verify(ctx, n);
    if (consistency->parsed()) return cmd_consistency(ctx, metric, dt_text, n);
  } catch (const CapacityExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace reorderkit::cli
