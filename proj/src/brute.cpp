#include "selfdual/brute.hpp"

#include <algorithm>

#include "selfdual/errors.hpp"
#include "selfdual/fixed_weight.hpp"

namespace selfdual {

SelfDualVerdict algorithm_dual(const Hypergraph& f, Validation validation, unsigned limit) {
  if (f.n() > limit) {
    throw SizeLimitError("algorithm_dual: n = " + std::to_string(f.n()) + " exceeds the brute-force limit " +
                         std::to_string(limit));
  }
  if (validation == Validation::kCheck) {
    require_intersecting_sperner(f);
  }
  if (f.n() == 0) {
    return SelfDualVerdict::not_self_dual();
  }
  const unsigned n = f.n();
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  std::uint64_t sum = 0;
  for (Assignment x = 0; x < half; ++x) {
    sum += static_cast<std::uint64_t>(evaluate(f, x)) + static_cast<std::uint64_t>(evaluate(f, complement(x, n)));
  }
  return sum == half ? SelfDualVerdict::self_dual() : SelfDualVerdict::not_self_dual();
}

HitCount brute_count_hitting_sets(const Hypergraph& h, unsigned limit) {
  const EdgeMask vertices = occupied_vertices(h);
  if (weight(vertices) > limit) {
    throw SizeLimitError("brute_count_hitting_sets: |V(H)| = " + std::to_string(weight(vertices)) +
                         " exceeds the brute-force limit " + std::to_string(limit));
  }
  const auto edges = h.edges();
  HitCount count = 0;
  // Walks every t ⊆ V(H), including ∅ and V(H) itself.
  EdgeMask t = 0;
  do {
    const bool hits_all = std::all_of(edges.begin(), edges.end(), [t](EdgeMask e) { return (e & t) != 0; });
    count += hits_all ? 1 : 0;
    t = (t - vertices) & vertices;
  } while (t != 0);
  return count;
}

Hypergraph brute_dualize(const Hypergraph& f) {
  const unsigned n = f.n();
  if (n > kDualizeLimit) {
    throw SizeLimitError("brute_dualize: n = " + std::to_string(n) + " exceeds " + std::to_string(kDualizeLimit));
  }
  const auto edges = f.edges();
  std::vector<EdgeMask> minimal;
  for (unsigned k = 0; k <= n; ++k) {
    for (const EdgeMask t : FixedWeightMasks(n, k)) {
      const bool hits_all = std::all_of(edges.begin(), edges.end(), [t](EdgeMask e) { return (e & t) != 0; });
      if (!hits_all) {
        continue;
      }
      const bool dominated =
          std::any_of(minimal.begin(), minimal.end(), [t](EdgeMask kept) { return is_subset(kept, t); });
      if (!dominated) {
        minimal.push_back(t);
      }
    }
  }
  return Hypergraph(n, std::move(minimal));
}

}  // namespace selfdual
