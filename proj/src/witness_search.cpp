#include "selfdual/witness_search.hpp"

#include "selfdual/errors.hpp"
#include "selfdual/fixed_weight.hpp"

namespace selfdual {

SelfDualVerdict search_witness(const Hypergraph& f, Validation validation) {
  if (f.empty()) {
    throw PreconditionError("search_witness needs at least one term");
  }
  if (validation == Validation::kCheck) {
    require_intersecting_sperner(f);
  }
  const unsigned n = f.n();
  for (unsigned w = 1; w <= n / 2; ++w) {
    for (const Assignment x : FixedWeightMasks(n, w)) {
      // x̄ is the heavy side and is usually satisfied, so test it first.
      if (!evaluate(f, complement(x, n)) && !evaluate(f, x)) {
        return SelfDualVerdict::not_self_dual(x);
      }
    }
  }
  return SelfDualVerdict::self_dual();
}

}  // namespace selfdual
