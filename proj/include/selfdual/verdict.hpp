#pragma once

#include <optional>
#include <string>

#include "selfdual/hypergraph.hpp"

namespace selfdual {

/// Whether deciders run the Sperner/intersection precondition scan before
/// deciding. Skipping it is for callers that already know the input is valid,
/// e.g. generator output in timed benchmark sections.
enum class Validation { kCheck, kTrusted };

class SelfDualVerdict {
 public:
  static SelfDualVerdict self_dual() { return SelfDualVerdict(true, std::nullopt); }

  /// The witness, when present, is a point x with f(x) = f(x̄) = 0. Counting
  /// deciders produce no witness.
  static SelfDualVerdict not_self_dual(std::optional<Assignment> witness = std::nullopt) {
    return SelfDualVerdict(false, witness);
  }

  bool is_self_dual() const { return self_dual_; }
  const std::optional<Assignment>& witness() const { return witness_; }

  /// "self-dual" or "not-self-dual".
  std::string summary() const { return self_dual_ ? "self-dual" : "not-self-dual"; }

  friend bool operator==(const SelfDualVerdict&, const SelfDualVerdict&) = default;

 private:
  SelfDualVerdict(bool self_dual, std::optional<Assignment> witness) : self_dual_(self_dual), witness_(witness) {}

  bool self_dual_;
  std::optional<Assignment> witness_;
};

}  // namespace selfdual
