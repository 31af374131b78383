#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "selfdual/brute.hpp"
#include "selfdual/counting.hpp"
#include "selfdual/fk_duality.hpp"
#include "selfdual/generator.hpp"
#include "selfdual/instance_io.hpp"
#include "selfdual/witness_search.hpp"
#include "support/oracles.hpp"

using namespace selfdual;

namespace {

std::string serialize(const GenConfig& cfg) {
  std::ostringstream out;
  write_instance(out, generate(cfg), cfg.header_comments());
  return out.str();
}

}  // namespace

TEST_CASE("the documented PRNG is the standard 64-bit Mersenne Twister", "[gen]") {
  // Fixed by the C++ standard for a default-constructed engine.
  std::mt19937_64 engine;
  engine.discard(9999);
  CHECK(engine() == 9981545732273789042ULL);
}

TEST_CASE("defaults", "[gen]") {
  const GenConfig cfg = GenConfig::defaults(10, 3);
  CHECK(cfg.lo == 128);
  CHECK(cfg.hi == 1024 - 128);
  CHECK(cfg.trials == 64 * 128);
  CHECK(cfg.seed == 3);
  CHECK_NOTHROW(cfg.validate());

  const GenConfig tiny = GenConfig::defaults(2, 0);
  CHECK(tiny.lo == 1);
  CHECK(tiny.hi == 3);
  CHECK_NOTHROW(tiny.validate());

  CHECK(cfg.header_comments() ==
        std::vector<std::string>{"random intersecting Sperner instance n=10", "seed=3 trials=8192 lo=128 hi=896"});
}

TEST_CASE("invalid configurations are rejected", "[gen]") {
  GenConfig cfg = GenConfig::defaults(10, 1);
  cfg.trials = 0;
  CHECK_THROWS_AS(generate(cfg), std::invalid_argument);

  cfg = GenConfig::defaults(10, 1);
  cfg.lo = 0;
  CHECK_THROWS_AS(generate(cfg), std::invalid_argument);

  cfg = GenConfig::defaults(10, 1);
  cfg.hi = cfg.lo;
  CHECK_THROWS_AS(generate(cfg), std::invalid_argument);

  cfg = GenConfig::defaults(10, 1);
  cfg.hi = 1025;
  CHECK_THROWS_AS(generate(cfg), std::invalid_argument);

  CHECK_THROWS_AS(generate(GenConfig::defaults(63, 1)), std::invalid_argument);
  CHECK_THROWS_AS(generate(GenConfig::defaults(1, 1)), std::invalid_argument);
}

TEST_CASE("a single trial keeps its one candidate", "[gen]") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GenConfig cfg = GenConfig::defaults(12, seed);
    cfg.trials = 1;
    const Hypergraph h = generate(cfg);
    REQUIRE(h.size() == 1);
    REQUIRE(h[0] >= cfg.lo);
    REQUIRE(h[0] < cfg.hi);
  }
}

TEST_CASE("the first candidate follows the documented draw", "[gen]") {
  GenConfig cfg = GenConfig::defaults(20, 99);
  cfg.trials = 1;
  std::mt19937_64 engine(99);
  const auto r = static_cast<unsigned __int128>(engine());
  const auto expected = cfg.lo + static_cast<std::uint64_t>((r * (cfg.hi - cfg.lo)) >> 64);
  CHECK(generate(cfg)[0] == expected);
}

TEST_CASE("generated families are intersecting and Sperner", "[gen][property]") {
  for (unsigned n = 2; n <= 14; ++n) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const GenConfig cfg = GenConfig::defaults(n, seed);
      const Hypergraph h = generate(cfg);
      REQUIRE_FALSE(h.empty());
      REQUIRE(check_intersecting(h));
      REQUIRE(check_sperner(h));
      for (const EdgeMask e : h.edges()) {
        REQUIRE(e >= cfg.lo);
        REQUIRE(e < cfg.hi);
      }
    }
  }
}

TEST_CASE("generation is reproducible", "[gen][property]") {
  for (unsigned n = 3; n <= 16; ++n) {
    const GenConfig cfg = GenConfig::defaults(n, 1000 + n);
    REQUIRE(generate(cfg) == generate(cfg));
    REQUIRE(serialize(cfg) == serialize(cfg));
  }
  CHECK(generate(GenConfig::defaults(12, 1)) != generate(GenConfig::defaults(12, 2)));
}

TEST_CASE("default trials give edge counts on the scale of tens to hundreds at n=10", "[gen]") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const std::size_t m = generate(GenConfig::defaults(10, seed)).size();
    CHECK(m >= 20);
    CHECK(m <= 400);
  }
}

TEST_CASE("all deciders agree on generated instances", "[gen][property]") {
  for (unsigned n = 3; n <= 11; ++n) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      GenConfig cfg = GenConfig::defaults(n, seed);
      cfg.trials = std::uint64_t{1} << (seed + 1);
      const Hypergraph f = generate(cfg);
      const bool expected = oracle::is_self_dual(oracle::to_family(f), n);
      REQUIRE(selfdual_by_count(f).is_self_dual() == expected);
      REQUIRE(search_witness(f).is_self_dual() == expected);
      REQUIRE(algorithm_dual(f).is_self_dual() == expected);
      REQUIRE(fk_selfdual(f).is_self_dual() == expected);
    }
  }
}

TEST_CASE("binomial_family", "[gen]") {
  CHECK(binomial_family(3) == Hypergraph(3, {0b011, 0b101, 0b110}));
  CHECK(binomial_family(5).size() == 10);
  CHECK(binomial_family(7).size() == 35);
  CHECK(binomial_family(9).size() == 126);

  for (const unsigned n : {3U, 5U, 7U, 9U}) {
    const Hypergraph f = binomial_family(n);
    REQUIRE(check_intersecting(f));
    REQUIRE(check_sperner(f));
    CHECK(selfdual_by_count(f).is_self_dual());
    CHECK(search_witness(f).is_self_dual());
    CHECK(algorithm_dual(f).is_self_dual());
    CHECK(fk_selfdual(f).is_self_dual());
    CHECK(count_zero_points(f) == HitCount{1} << (n - 1));
  }

  CHECK_THROWS_AS(binomial_family(4), std::invalid_argument);
  CHECK_THROWS_AS(binomial_family(1), std::invalid_argument);
  CHECK_THROWS_AS(binomial_family(27), std::invalid_argument);
}
