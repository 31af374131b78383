#pragma once

#include "selfdual/counting.hpp"
#include "selfdual/hypergraph.hpp"
#include "selfdual/verdict.hpp"

namespace selfdual {

inline constexpr unsigned kDefaultBruteLimit = 26;
inline constexpr unsigned kDualizeLimit = 16;

/// S = sum over x < 2^(n-1) of f(x) + f(x̄); self-dual iff S == 2^(n-1).
/// Throws SizeLimitError if n > limit.
SelfDualVerdict algorithm_dual(const Hypergraph& f, Validation validation = Validation::kCheck,
                               unsigned limit = kDefaultBruteLimit);

/// |hit_H| over V(H) by testing every subset of V(H).
/// Throws SizeLimitError if |V(H)| > limit.
HitCount brute_count_hitting_sets(const Hypergraph& h, unsigned limit = kDefaultBruteLimit);

/// The inclusion-minimal hitting sets of F over {0..n-1}, i.e. the terms of the
/// dual PIDNF, listed by ascending cardinality then ascending mask. The dual
/// of the constant-0 function (no terms) is {∅}.
/// Throws SizeLimitError if n > kDualizeLimit.
Hypergraph brute_dualize(const Hypergraph& f);

}  // namespace selfdual
