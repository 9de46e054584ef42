#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reorderkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A packet-ID sequence violates its invariants (non-positive or repeated ID).
/// `position()` is 1-based.
class InvalidInput : public Error {
 public:
  InvalidInput(std::size_t position, const std::string& what)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A numeric parameter is outside its admissible range (dt <= 0, n too large, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// The buffer occupancy exceeded the receiver buffer at `position()` (1-based).
class CapacityExceeded : public Error {
 public:
  CapacityExceeded(std::size_t position, const std::string& what)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace reorderkit
