#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "selfdual/brute.hpp"

namespace selfdual::cli {

// Process exit codes.
inline constexpr int kExitSelfDual = 0;
inline constexpr int kExitNotSelfDual = 1;
inline constexpr int kExitError = 2;
inline constexpr int kExitDisagreement = 3;

struct GenArgs {
  unsigned n = 0;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> lo;
  std::optional<std::uint64_t> hi;
  std::string family = "random";
  std::string output;  // empty: stdout
};

struct CheckArgs {
  std::string file;
  std::string algo = "count";
  bool no_validate = false;
  unsigned brute_limit = kDefaultBruteLimit;
};

struct VerifyArgs {
  std::string file;
  unsigned brute_limit = kDefaultBruteLimit;
};

struct BenchArgs {
  std::string sizes;
  std::string algos = "fk,count,brute,search";
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> trials;
  unsigned repeats = 3;
  double timeout = 300.0;
  unsigned brute_limit = kDefaultBruteLimit;
  bool force = false;
  std::string csv;
  std::vector<std::string> inputs;
};

int run_gen(const GenArgs& args);
int run_check(const CheckArgs& args);
int run_verify(const VerifyArgs& args);
int run_bench(const BenchArgs& args);

}  // namespace selfdual::cli
