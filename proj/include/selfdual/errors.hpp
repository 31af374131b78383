#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace selfdual {

/// An input violates a documented precondition of a decider (Sperner or
/// pairwise-intersection). Carries the offending edge pair when there is one.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what,
                             std::optional<std::pair<std::uint64_t, std::uint64_t>> pair = std::nullopt)
      : std::invalid_argument(what), pair_(pair) {}

  const std::optional<std::pair<std::uint64_t, std::uint64_t>>& offending_pair() const { return pair_; }

 private:
  std::optional<std::pair<std::uint64_t, std::uint64_t>> pair_;
};

/// API misuse, e.g. calling the subset counter with s not inside e.
/// Distinct from a legitimate zero result.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An exhaustive routine was asked to run beyond its configured size cap.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace selfdual
