#pragma once

#include <stdexcept>
#include <string>

namespace bflow {

// Malformed edge-list input. line() is 1-based; 0 means "end of input".
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(format(line, message)), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  static std::string format(int line, const std::string& message) {
    if (line <= 0) return "input: " + message;
    return "line " + std::to_string(line) + ": " + message;
  }

  int line_;
};

// The graph is well formed but not a connected claw-free block graph.
class InvalidGraph : public std::runtime_error {
 public:
  enum class Reason { kNotConnected, kNotBlockGraph, kClaw, kNotATree, kEmpty };

  InvalidGraph(Reason reason, const std::string& message)
      : std::runtime_error(message), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

// A caller violated an operation's stated precondition (k too small,
// W not k-dense, bad block id, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exhaustive search hit its configured branch-node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(long long budget)
      : std::runtime_error("oracle search budget of " + std::to_string(budget) +
                           " branch nodes exceeded"),
        budget_(budget) {}

  long long budget() const noexcept { return budget_; }

 private:
  long long budget_;
};

}  // namespace bflow
