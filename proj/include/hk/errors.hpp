#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hk {

// Error in a text input (graph file, word, set), with the 1-based line it
// was found on (0 when the input has no line structure).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Raised when an enumeration would scan more candidate tuples than the
// configured budget allows.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::uint64_t would_scan, std::uint64_t budget, bool saturated)
      : std::runtime_error("enumeration would scan " +
                           std::string(saturated ? "more than " : "") +
                           std::to_string(would_scan) +
                           " candidate tuples (budget " +
                           std::to_string(budget) + ")"),
        would_scan_(would_scan),
        saturated_(saturated) {}

  // Saturates at UINT64_MAX when the true count overflows 64 bits.
  std::uint64_t would_scan() const { return would_scan_; }
  bool saturated() const { return saturated_; }

 private:
  std::uint64_t would_scan_;
  bool saturated_;
};

}  // namespace hk
