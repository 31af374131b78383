#pragma once

#include <cstdint>
#include <functional>

#include "selfdual/hypergraph.hpp"
#include "selfdual/verdict.hpp"

namespace selfdual {

/// Exact number of hitting sets. With n <= 62 every count is at most 2^62.
using HitCount = std::uint64_t;

using HitCounter = std::function<HitCount(const Hypergraph&)>;

/// |hit_H(e, s)|: the hitting sets t of H over V(H) with t ∩ e = s.
///
/// Clears e \ s from every edge (H1), drops the edges that s already hits
/// (H2), and returns 2^k * recurse(H2) where k counts the vertices of H1 that
/// are neither in s nor in V(H2). An empty H2 contributes recurse(H2), which
/// must be 1. Returns 0 when H2 holds an empty edge.
///
/// Throws ContractError if H is empty, e is not an edge of H, s is empty, or
/// s is not a subset of e.
HitCount count_hit_subset(const Hypergraph& h, EdgeMask e, EdgeMask s, const HitCounter& recurse);

/// |hit_H| over the universe V(H): 1 for the empty hypergraph, 0 if some edge
/// is empty, otherwise the product over connected components of the sum of
/// count_hit_subset over the non-empty subsets of a pivot edge.
///
/// The pivot is the smallest edge of the component, ties going to the lowest
/// mask value; subsets are visited in ascending mask order.
HitCount count_hitting_sets(const Hypergraph& h);

/// Number of zero points of f over all n variables: count_hitting_sets(F)
/// scaled by 2 for every variable that appears in no term.
HitCount count_zero_points(const Hypergraph& f);

/// Self-dual iff count_zero_points(F) == 2^(n-1). Never carries a witness.
/// Under kCheck, throws PreconditionError unless F is an intersecting Sperner
/// family.
SelfDualVerdict selfdual_by_count(const Hypergraph& f, Validation validation = Validation::kCheck);

}  // namespace selfdual
