#include "selfdual/generator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include <spdlog/spdlog.h>

#include "selfdual/fixed_weight.hpp"

namespace selfdual {

GenConfig GenConfig::defaults(unsigned n, std::uint64_t seed) {
  GenConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  if (n < 3 || n > kMaxVertices) {
    cfg.lo = 1;
    cfg.hi = n < 64 ? (std::uint64_t{1} << n) - 1 : 0;
    cfg.trials = 64;
    return cfg;
  }
  cfg.lo = std::uint64_t{1} << (n - 3);
  cfg.hi = (std::uint64_t{1} << n) - cfg.lo;
  cfg.trials = 64 * cfg.lo;
  return cfg;
}

void GenConfig::validate() const {
  if (n > kMaxVertices) {
    throw std::invalid_argument("n exceeds " + std::to_string(kMaxVertices));
  }
  if (n < 2) {
    throw std::invalid_argument("n must be at least 2");
  }
  if (trials == 0) {
    throw std::invalid_argument("trials must be at least 1");
  }
  if (!(0 < lo && lo < hi && hi < (std::uint64_t{1} << n))) {
    throw std::invalid_argument("candidate range must satisfy 0 < lo < hi < 2^n");
  }
}

std::vector<std::string> GenConfig::header_comments() const {
  return {
      "random intersecting Sperner instance n=" + std::to_string(n),
      "seed=" + std::to_string(seed) + " trials=" + std::to_string(trials) + " lo=" + std::to_string(lo) +
          " hi=" + std::to_string(hi),
  };
}

Hypergraph generate(const GenConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  const std::uint64_t span = cfg.hi - cfg.lo;
  std::vector<EdgeMask> edges;
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    const auto offset = static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * span) >> 64);
    const EdgeMask t = cfg.lo + offset;
    const bool compatible = std::all_of(edges.begin(), edges.end(), [t](EdgeMask e) {
      return (e & t) != 0 && !is_subset(e, t) && !is_subset(t, e);
    });
    if (compatible) {
      edges.push_back(t);
    }
  }
  if (edges.empty()) {
    spdlog::warn("generate: every candidate was rejected, returning an empty hypergraph");
  }
  return Hypergraph(cfg.n, std::move(edges));
}

Hypergraph binomial_family(unsigned n) {
  if (n % 2 == 0 || n < 3 || n > 25) {
    throw std::invalid_argument("binomial_family needs an odd n between 3 and 25");
  }
  std::vector<EdgeMask> edges;
  for (const EdgeMask e : FixedWeightMasks(n, (n + 1) / 2)) {
    edges.push_back(e);
  }
  return Hypergraph(n, std::move(edges));
}

}  // namespace selfdual
