#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace boxdim {

// Parse failure for the text formats. offset is the 0-based byte position
// (graph6) or line number (edge list, poset) of the offending input.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Thrown when an exhaustive search would exceed its OracleBudget. Carries the
// best bounds established before giving up, when any were computed.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& msg,
                          std::optional<int> best_upper = std::nullopt,
                          std::optional<int> best_lower = std::nullopt)
      : std::runtime_error(msg), upper_(best_upper), lower_(best_lower) {}

  std::optional<int> best_upper() const { return upper_; }
  std::optional<int> best_lower() const { return lower_; }

 private:
  std::optional<int> upper_;
  std::optional<int> lower_;
};

}  // namespace boxdim
