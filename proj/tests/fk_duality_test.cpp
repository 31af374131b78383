#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "selfdual/brute.hpp"
#include "selfdual/errors.hpp"
#include "selfdual/fk_duality.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace selfdual;
using selfdual::testing::running_example;
using selfdual::testing::mask;

namespace {

bool witness_separates(const Hypergraph& f, const Hypergraph& g, Assignment x) {
  return evaluate(f, x) == evaluate(g, complement(x, f.n()));
}

}  // namespace

TEST_CASE("fk_check_dual small cases", "[fk]") {
  CHECK(fk_check_dual(Hypergraph(1, {mask({0})}), Hypergraph(1, {mask({0})})).is_dual());
  CHECK(fk_check_dual(Hypergraph(2, {mask({0, 1})}), Hypergraph(2, {mask({0}), mask({1})})).is_dual());
  CHECK(fk_check_dual(Hypergraph(2, {mask({0}), mask({1})}), Hypergraph(2, {mask({0, 1})})).is_dual());

  const Hypergraph triple(3, {mask({0, 1, 2})});
  const auto verdict = fk_check_dual(triple, triple);
  REQUIRE_FALSE(verdict.is_dual());
  CHECK(witness_separates(triple, triple, *verdict.witness()));
  CHECK(*verdict.witness() == mask({0}));

  // Constants: no terms is 0, the empty term is 1.
  CHECK(fk_check_dual(Hypergraph(2), Hypergraph(2, {0})).is_dual());
  CHECK(fk_check_dual(Hypergraph(2, {0}), Hypergraph(2)).is_dual());
  CHECK_FALSE(fk_check_dual(Hypergraph(2), Hypergraph(2)).is_dual());
  CHECK_FALSE(fk_check_dual(Hypergraph(2, {0}), Hypergraph(2, {0})).is_dual());
}

TEST_CASE("fk_check_dual rejects bad input", "[fk]") {
  CHECK_THROWS_AS(fk_check_dual(Hypergraph(2, {mask({0}), mask({0, 1})}), Hypergraph(2, {mask({0})})),
                  PreconditionError);
  CHECK_THROWS_AS(fk_check_dual(Hypergraph(2, {mask({0})}), Hypergraph(3, {mask({0})})), std::invalid_argument);
}

TEST_CASE("disjoint terms give the first term as witness", "[fk]") {
  const Hypergraph f(3, {mask({0})});
  const Hypergraph g(3, {mask({1, 2})});
  const auto verdict = fk_check_dual(f, g);
  REQUIRE_FALSE(verdict.is_dual());
  CHECK(*verdict.witness() == mask({0}));
  CHECK(evaluate(f, mask({0})));
  CHECK(evaluate(g, complement(mask({0}), 3)));
}

TEST_CASE("fk_check_dual accepts oracle duals and rejects perturbed ones", "[fk][property]") {
  std::mt19937_64 rng(41);
  int pairs = 0;
  for (int round = 0; round < 300; ++round) {
    const unsigned n = 2 + round % 9;
    const Hypergraph f = selfdual::testing::random_sperner(rng, n, 9);
    if (f.empty()) {
      continue;
    }
    ++pairs;
    const Hypergraph g = brute_dualize(f);
    REQUIRE(fk_check_dual(f, g).is_dual());
    REQUIRE(fk_check_dual(g, f).is_dual());

    for (std::size_t drop = 0; drop < g.size(); ++drop) {
      std::vector<EdgeMask> fewer(g.edges().begin(), g.edges().end());
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
      const Hypergraph perturbed(n, fewer);
      const auto verdict = fk_check_dual(f, perturbed);
      REQUIRE_FALSE(verdict.is_dual());
      REQUIRE(witness_separates(f, perturbed, *verdict.witness()));
    }
  }
  CHECK(pairs >= 200);
}

TEST_CASE("fk_check_dual matches the point-wise oracle on arbitrary pairs", "[fk][property]") {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 400; ++round) {
    const unsigned n = 1 + round % 8;
    const Hypergraph f = selfdual::testing::random_sperner(rng, n, 6);
    const Hypergraph g = selfdual::testing::random_sperner(rng, n, 6);
    const auto verdict = fk_check_dual(f, g);
    REQUIRE(verdict.is_dual() == oracle::are_dual(oracle::to_family(f), oracle::to_family(g), n));
    if (!verdict.is_dual()) {
      REQUIRE(witness_separates(f, g, *verdict.witness()));
    }
  }
}

TEST_CASE("fk_selfdual", "[fk]") {
  CHECK(fk_selfdual(Hypergraph(3, {mask({0, 1}), mask({1, 2}), mask({0, 2})})).is_self_dual());
  CHECK(fk_selfdual(running_example()).is_self_dual());

  const Hypergraph triple(3, {mask({0, 1, 2})});
  const auto verdict = fk_selfdual(triple);
  REQUIRE_FALSE(verdict.is_self_dual());
  REQUIRE(verdict.witness());
  CHECK_FALSE(evaluate(triple, *verdict.witness()));
  CHECK_FALSE(evaluate(triple, complement(*verdict.witness(), 3)));

  CHECK_THROWS_AS(fk_selfdual(Hypergraph(2, {mask({0}), mask({1})})), PreconditionError);
}

TEST_CASE("fk_selfdual agrees with the oracle on generated instances", "[fk][property]") {
  for (const Hypergraph& f : selfdual::testing::generated_corpus(150, 12, 500)) {
    const auto verdict = fk_selfdual(f);
    REQUIRE(verdict.is_self_dual() == oracle::is_self_dual(oracle::to_family(f), f.n()));
    if (!verdict.is_self_dual()) {
      REQUIRE(verdict.witness());
      REQUIRE_FALSE(evaluate(f, *verdict.witness()));
      REQUIRE_FALSE(evaluate(f, complement(*verdict.witness(), f.n())));
    }
  }
}
