#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphsplice {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph value would violate its invariants (loop, endpoint out of range,
/// bad ordering, generator parameter below its minimum).
class invalid_graph : public error {
 public:
  using error::error;
};

/// A cutting rule does not address valid positions of the graph it is applied to.
class invalid_rule : public error {
 public:
  using error::error;
};

/// A splicing rule cannot recombine the two cut graphs (power or
/// half-vertex count differs), or fragments handed to join() disagree.
class not_applicable : public error {
 public:
  using error::error;
};

/// A splicing system or closure configuration is unusable (no axioms or
/// rules, a non-simple axiom, caps below the axiom sizes).
class invalid_system : public error {
 public:
  using error::error;
};

/// A configured enumeration or canonicalization cap was exceeded.
class cap_exceeded : public error {
 public:
  using error::error;
};

/// Malformed graph or system text. line() is 1-based; 0 means "no line".
class parse_error : public error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace graphsplice
