#pragma once

#include <stdexcept>
#include <string>

namespace critgraph {

// Invalid arguments or violated preconditions on public operations.
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed serialized data. Carries the byte offset of the first bad byte.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
        offset_(byte_offset) {}

  std::size_t byte_offset() const { return offset_; }

private:
  std::size_t offset_;
};

// A configured resource cap was exceeded before the computation could start.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace critgraph
