#include "reorderkit/metrics.hpp"

#include <charconv>

namespace reorderkit {

Threshold Threshold::finite(std::int64_t dt) {
  if (dt <= 0) {
    throw InvalidParameter("dt must be a positive integer or inf, got " + std::to_string(dt));
  }
  Threshold t;
  t.bound_ = dt;
  return t;
}

Threshold Threshold::parse(const std::string& text) {
  if (text == "inf") return infinite();
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw InvalidParameter("dt must be a positive integer or inf, got '" + text + "'");
  }
  return finite(value);
}

bool Threshold::admits(std::int64_t displacement) const noexcept {
  if (!bound_) return true;
  return displacement >= -*bound_ && displacement <= *bound_;
}

std::string Threshold::to_string() const {
  return bound_ ? std::to_string(*bound_) : std::string("inf");
}

DisplacementDistribution reorder_density(const Permutation& p, Threshold dt) {
  DisplacementDistribution rd;
  rd.dt = dt;
  rd.total = p.size();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto d = static_cast<std::int64_t>(p[i]) - static_cast<std::int64_t>(i + 1);
    if (dt.admits(d)) ++rd.counts[d];
  }
  return rd;
}

RcvWindowSeries rcv_window_series(const IdSequence& a, std::uint64_t rcv_buffer) {
  if (rcv_buffer == 0) throw InvalidParameter("rcv_buffer must be positive");
  const auto m = map_m(a);
  RcvWindowSeries series{rcv_buffer, {}};
  series.values.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.values[i] > rcv_buffer) {
      throw CapacityExceeded(i + 1, "buffer size " + std::to_string(m.values[i]) +
                                        " at position " + std::to_string(i + 1) +
                                        " exceeds rcv_buffer " + std::to_string(rcv_buffer));
    }
    series.values.push_back(rcv_buffer - m.values[i]);
  }
  return series;
}

namespace detail {

void check_enumeration_length(std::size_t n, std::size_t max_n) {
  if (n < 1 || n > max_n) {
    throw InvalidParameter("n must be in 1.." + std::to_string(max_n) + ", got " +
                           std::to_string(n));
  }
}

}  // namespace detail

}  // namespace reorderkit
