#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace foxcolor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed diagram, braid, or descriptor text.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A structurally invalid diagram (bad arc ids, incidence counts, rotation data).
class InvalidDiagram : public Error {
 public:
  using Error::Error;
};

/// The rotation system does not describe a planar embedding.
class EmbeddingError : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition does not hold for the given arguments.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Enumeration was requested for a space larger than the configured cap.
/// The exact size is carried as a decimal string since it may exceed 64 bits.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string count, std::uint64_t cap)
      : Error("solution count " + count + " exceeds enumeration cap " + std::to_string(cap)),
        count_(std::move(count)),
        cap_(cap) {}
  const std::string& count() const noexcept { return count_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::string count_;
  std::uint64_t cap_;
};

/// A coloring cannot be normalized or extended: some difference b - a is not a
/// unit modulo n, or no crossing carries three distinct colors.
class Obstruction : public Error {
 public:
  using Error::Error;
};

}  // namespace foxcolor
