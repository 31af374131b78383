#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "selfdual/generator.hpp"
#include "selfdual/hypergraph.hpp"

namespace selfdual::testing {

// {{0,3},{0,4},{1,3,4},{0,1,2},{2,3,4}}, the running example: self-dual, 16 hitting sets.
inline Hypergraph running_example() {
  return Hypergraph(5, {0b01001, 0b10001, 0b11010, 0b00111, 0b11100});
}

inline EdgeMask mask(std::initializer_list<unsigned> vertices) {
  EdgeMask m = 0;
  for (const unsigned v : vertices) {
    m |= vertex_bit(v);
  }
  return m;
}

// Arbitrary families: may be disconnected, non-Sperner, non-intersecting.
inline Hypergraph random_family(std::mt19937_64& rng, unsigned n, unsigned max_edges) {
  std::uniform_int_distribution<unsigned> edge_count(0, max_edges);
  std::uniform_int_distribution<EdgeMask> edge(1, universe_mask(n));
  std::vector<EdgeMask> edges(edge_count(rng));
  for (auto& e : edges) {
    e = edge(rng);
  }
  return Hypergraph(n, std::move(edges));
}

// Random Sperner family (supersets dropped), not necessarily intersecting.
inline Hypergraph random_sperner(std::mt19937_64& rng, unsigned n, unsigned max_edges) {
  const Hypergraph raw = random_family(rng, n, max_edges);
  std::vector<EdgeMask> kept;
  for (const EdgeMask e : raw.edges()) {
    bool minimal = true;
    for (const EdgeMask other : raw.edges()) {
      minimal = minimal && (other == e || !is_subset(other, e));
    }
    if (minimal) {
      kept.push_back(e);
    }
  }
  return Hypergraph(n, std::move(kept));
}

// Generator output for n in [3, max_n], `count` instances with varied seeds
// and trial budgets so that both verdicts occur.
inline std::vector<Hypergraph> generated_corpus(unsigned count, unsigned max_n, std::uint64_t base_seed = 1) {
  std::vector<Hypergraph> corpus;
  for (unsigned i = 0; i < count; ++i) {
    const unsigned n = 3 + i % (max_n - 2);
    GenConfig cfg = GenConfig::defaults(n, base_seed + i);
    const std::uint64_t budgets[] = {4, 16, 64, cfg.trials};
    cfg.trials = budgets[(i / (max_n - 2)) % 4];
    corpus.push_back(generate(cfg));
  }
  return corpus;
}

}  // namespace selfdual::testing
