#pragma once

#include <optional>

#include "selfdual/hypergraph.hpp"
#include "selfdual/verdict.hpp"

namespace selfdual {

class DualVerdict {
 public:
  static DualVerdict dual() { return DualVerdict(std::nullopt); }

  /// x satisfies f(x) == g(x̄), which mutually dual functions never do.
  static DualVerdict not_dual(Assignment witness) { return DualVerdict(witness); }

  bool is_dual() const { return !witness_.has_value(); }
  const std::optional<Assignment>& witness() const { return witness_; }

  friend bool operator==(const DualVerdict&, const DualVerdict&) = default;

 private:
  explicit DualVerdict(std::optional<Assignment> witness) : witness_(witness) {}

  std::optional<Assignment> witness_;
};

/// Fredman-Khachiyan duality test (their first algorithm, quasi-polynomial
/// N^O(log^2 N) with N = |F| + |G|): decides whether F and G are the PIDNFs of
/// a pair of mutually dual positive functions.
///
/// Each call, in order:
///   1. a disjoint pair e in F, t in G gives the witness x = e;
///   2. |F| * |G| <= 1 is decided directly;
///   3. if sum 2^-|e| over F plus sum 2^-|t| over G is below 1, a
///      conditional-expectation walk over the variables in ascending id yields
///      x with f(x) = g(x̄) = 0;
///   4. otherwise split on the most frequent variable v (ties: lowest id) and
///      recurse on (F0, min(G0 ∪ G1)) and (G0, min(F0 ∪ F1)), lifting any
///      witness back with bit v fixed.
/// Every witness is re-evaluated against F and G before it is returned.
///
/// Throws std::invalid_argument if F and G have different n; under kCheck,
/// PreconditionError if either is not a Sperner family.
DualVerdict fk_check_dual(const Hypergraph& f, const Hypergraph& g, Validation validation = Validation::kCheck);

/// fk_check_dual(F, F) mapped to a self-duality verdict. Under kCheck F must
/// also be intersecting, which forces the witness to satisfy f(x) = f(x̄) = 0.
SelfDualVerdict fk_selfdual(const Hypergraph& f, Validation validation = Validation::kCheck);

}  // namespace selfdual
