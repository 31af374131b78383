#pragma once

#include "selfdual/hypergraph.hpp"
#include "selfdual/verdict.hpp"

namespace selfdual {

/// Scans weights 1 .. floor(n/2), each in ascending numeric order, for a point
/// x with f(x) = 0 and f(x̄) = 0. The first such x is returned as the witness;
/// if none exists F is self-dual.
///
/// Throws PreconditionError for an empty F and, under kCheck, for inputs that
/// are not intersecting Sperner families.
SelfDualVerdict search_witness(const Hypergraph& f, Validation validation = Validation::kCheck);

}  // namespace selfdual
