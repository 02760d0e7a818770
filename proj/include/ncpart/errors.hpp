#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncpart {

/// Malformed textual input (block notation, tableau tokens, cache files).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A request that would exceed a configured resource cap.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cache file that cannot be trusted (bad header, truncation, failed spot check).
class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Always a bug upstream, never recovered.
class LogicError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ncpart
