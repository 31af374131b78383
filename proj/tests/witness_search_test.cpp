#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "selfdual/errors.hpp"
#include "selfdual/fixed_weight.hpp"
#include "selfdual/witness_search.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace selfdual;
using selfdual::testing::running_example;
using selfdual::testing::mask;

namespace {

std::vector<EdgeMask> collect(unsigned n, unsigned k) {
  std::vector<EdgeMask> out;
  for (const EdgeMask x : FixedWeightMasks(n, k)) {
    out.push_back(x);
  }
  return out;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

}  // namespace

TEST_CASE("fixed-weight enumeration", "[witness]") {
  CHECK(collect(3, 1) == std::vector<EdgeMask>{1, 2, 4});
  CHECK(collect(3, 0) == std::vector<EdgeMask>{0});
  CHECK(collect(4, 2) == std::vector<EdgeMask>{0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100});
  CHECK(collect(4, 4) == std::vector<EdgeMask>{0b1111});
  CHECK(collect(3, 4).empty());
}

TEST_CASE("fixed-weight enumeration is exhaustive and ascending", "[witness][property]") {
  for (unsigned n = 0; n <= 14; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      const auto masks = collect(n, k);
      REQUIRE(masks.size() == binomial(n, k));
      for (std::size_t i = 0; i < masks.size(); ++i) {
        REQUIRE(weight(masks[i]) == k);
        REQUIRE(masks[i] < (EdgeMask{1} << n));
        if (i > 0) {
          REQUIRE(masks[i - 1] < masks[i]);
        }
      }
    }
  }
  // The top of the range stays within 62 bits.
  const auto top = collect(62, 61);
  CHECK(top.size() == 62);
  CHECK(top.back() == universe_mask(62) - 1);
}

TEST_CASE("search_witness", "[witness]") {
  const auto single = search_witness(Hypergraph(3, {mask({0, 1, 2})}));
  REQUIRE_FALSE(single.is_self_dual());
  REQUIRE(single.witness());
  CHECK(*single.witness() == 0b001);
  CHECK(format_assignment(*single.witness(), 3) == "001");

  CHECK(search_witness(Hypergraph(3, {mask({0, 1}), mask({1, 2}), mask({0, 2})})).is_self_dual());
  CHECK(search_witness(running_example()).is_self_dual());
  CHECK(search_witness(Hypergraph(1, {mask({0})})).is_self_dual());

  CHECK_THROWS_AS(search_witness(Hypergraph(3)), PreconditionError);
  CHECK_THROWS_AS(search_witness(Hypergraph(2, {mask({0}), mask({1})})), PreconditionError);
}

TEST_CASE("search_witness finds the lightest, smallest witness", "[witness][property]") {
  for (const Hypergraph& f : selfdual::testing::generated_corpus(150, 12, 900)) {
    if (f.empty()) {
      continue;
    }
    const unsigned n = f.n();
    const auto family = oracle::to_family(f);
    std::optional<Assignment> expected;
    for (unsigned w = 1; w <= n / 2 && !expected; ++w) {
      for (Assignment x = 0; x < (Assignment{1} << n); ++x) {
        if (weight(x) != w) {
          continue;
        }
        const auto point = oracle::point(x, n);
        if (!oracle::eval(family, point) && !oracle::eval(family, oracle::complement(point, n))) {
          expected = x;
          break;
        }
      }
    }
    const auto verdict = search_witness(f);
    REQUIRE(verdict.witness() == expected);
    REQUIRE(verdict.is_self_dual() == oracle::is_self_dual(family, n));
    REQUIRE(search_witness(f) == verdict);
  }
}
