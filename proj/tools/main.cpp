// selfdual: generate, check, cross-verify and benchmark self-duality deciders
// for positive Boolean functions given as intersecting Sperner hypergraphs.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "commands.hpp"

namespace {

// SELFDUAL_LOG_LEVEL=trace|debug|info|warn|error|off, default warn.
void configure_logging() {
  auto logger = spdlog::stderr_color_mt("selfdual");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("SELFDUAL_LOG_LEVEL")) {
    spdlog::set_level(spdlog::level::from_str(level));
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace selfdual::cli;
  configure_logging();

  CLI::App app{"Self-duality testing for positive DNFs / intersecting Sperner hypergraphs"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("-n", gen.n, "Number of variables (<= 62)")->required();
  gen_cmd->add_option("--seed", gen.seed, "PRNG seed")->capture_default_str();
  gen_cmd->add_option("--trials", gen.trials, "Candidate draws (default 64 * 2^(n-3))");
  gen_cmd->add_option("--lo", gen.lo, "Lowest candidate value (default 2^(n-3))");
  gen_cmd->add_option("--hi", gen.hi, "Candidate upper bound, exclusive (default 2^n - 2^(n-3))");
  gen_cmd->add_option("--family", gen.family, "random or binomial")->capture_default_str();
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Decide self-duality of an instance");
  check_cmd->add_option("file", check.file, "Instance file")->required();
  check_cmd->add_option("--algo", check.algo, "count, search, dual, fk or hs-brute")->capture_default_str();
  check_cmd->add_flag("--no-validate", check.no_validate, "Skip the Sperner/intersection precondition checks");
  check_cmd->add_option("--brute-limit", check.brute_limit, "Largest n for exhaustive algorithms")
      ->capture_default_str();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run every decider and counter and cross-check them");
  verify_cmd->add_option("file", verify.file, "Instance file")->required();
  verify_cmd->add_option("--brute-limit", verify.brute_limit, "Largest n for exhaustive algorithms")
      ->capture_default_str();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the deciders on generated or given instances");
  bench_cmd->add_option("--sizes", bench.sizes, "Sizes as a..b or a,b,c");
  bench_cmd->add_option("--algos", bench.algos, "Comma list of fk,count,brute,search")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Generator seed for every size")->capture_default_str();
  bench_cmd->add_option("--trials", bench.trials, "Override the generator trial budget");
  bench_cmd->add_option("--repeats", bench.repeats, "Timed runs per algorithm; the median is reported")
      ->capture_default_str();
  bench_cmd->add_option("--timeout", bench.timeout, "Seconds before an algorithm is dropped from the sweep")
      ->capture_default_str();
  bench_cmd->add_option("--brute-limit", bench.brute_limit, "Largest n for brute force")->capture_default_str();
  bench_cmd->add_flag("--force", bench.force, "Run brute force past its limit");
  bench_cmd->add_option("--csv", bench.csv, "CSV output file ('-' for stdout)");
  bench_cmd->add_option("--inputs", bench.inputs, "Benchmark these instance files instead of generating");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  if (*gen_cmd) {
    return run_gen(gen);
  }
  if (*check_cmd) {
    return run_check(check);
  }
  if (*verify_cmd) {
    return run_verify(verify);
  }
  return run_bench(bench);
}
