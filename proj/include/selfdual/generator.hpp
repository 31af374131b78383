#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "selfdual/hypergraph.hpp"

namespace selfdual {

/// Parameters of the random intersecting-Sperner generator. Candidates are
/// drawn uniformly from [lo, hi) and read as characteristic vectors.
struct GenConfig {
  unsigned n = 0;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  /// lo = 2^(n-3), hi = 2^n - lo, trials = 64 * 2^(n-3). For n < 3 the range
  /// falls back to [1, 2^n - 1) with 64 trials.
  static GenConfig defaults(unsigned n, std::uint64_t seed);

  /// Throws std::invalid_argument unless 2 <= n <= 62, 0 < lo < hi < 2^n and
  /// trials >= 1.
  void validate() const;

  /// Provenance lines for the instance file header.
  std::vector<std::string> header_comments() const;
};

/// Runs cfg.trials draws and keeps each candidate t that contains no edge, is
/// contained in no edge, and meets every edge. The result is always an
/// intersecting Sperner family, with edges in acceptance order.
///
/// Reproducible across platforms: the stream is std::mt19937_64 seeded with
/// cfg.seed, each draw consumes exactly one output r, and the candidate is
/// lo + floor(r * (hi - lo) / 2^64).
Hypergraph generate(const GenConfig& cfg);

/// All ceil(n/2)-subsets of {0..n-1}, in ascending mask order: the majority
/// function on n variables, which is self-dual. Requires odd n in [3, 25].
Hypergraph binomial_family(unsigned n);

}  // namespace selfdual
