#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "selfdual/brute.hpp"
#include "selfdual/hypergraph.hpp"
#include "selfdual/verdict.hpp"

namespace selfdual {

// CSV column order.
enum class Algo { kFk, kCount, kBrute, kSearch };

inline constexpr std::array<Algo, 4> kAllAlgos = {Algo::kFk, Algo::kCount, Algo::kBrute, Algo::kSearch};

inline constexpr std::string_view kBenchCsvHeader =
    "n,m,seed,algo_fk_s,algo_count_s,algo_brute_s,algo_search_s,verdict";

std::string_view algo_name(Algo algo);
std::optional<Algo> parse_algo(std::string_view name);

/// Runs one decider on f. kBrute is the exhaustive hitting-set count compared
/// against 2^(n-1).
SelfDualVerdict run_algo(Algo algo, const Hypergraph& f, Validation validation = Validation::kTrusted,
                         unsigned brute_limit = kDefaultBruteLimit);

/// One CSV row. Absent timings are algorithms that were skipped or timed out;
/// an absent seed marks an instance loaded from a file.
struct BenchRecord {
  unsigned n = 0;
  std::size_t m = 0;
  std::optional<std::uint64_t> seed;
  std::array<std::optional<double>, 4> seconds{};
  std::string verdict;

  std::optional<double>& time(Algo algo) { return seconds[static_cast<std::size_t>(algo)]; }
  const std::optional<double>& time(Algo algo) const { return seconds[static_cast<std::size_t>(algo)]; }

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

/// Timings use the shortest decimal form that reads back to the same double.
std::string format_csv_row(const BenchRecord& record);

/// Throws std::invalid_argument on a malformed row.
BenchRecord parse_csv_row(std::string_view line);

/// Raised when two deciders disagree on the same instance.
class VerdictMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BenchOptions {
  std::vector<Algo> algos{kAllAlgos.begin(), kAllAlgos.end()};
  unsigned repeats = 3;
  double timeout_seconds = 300.0;
  unsigned brute_limit = kDefaultBruteLimit;
};

struct BenchOutcome {
  BenchRecord record;
  // Algorithms whose run exceeded the timeout; their cells are blank.
  std::array<bool, 4> timed_out{};
};

/// Times every algorithm in options.algos on f (median of options.repeats
/// single-threaded runs on a monotonic clock) and cross-checks the verdicts.
/// Algorithms listed in `skip` are left blank. Throws VerdictMismatch on
/// disagreement. The input is assumed valid; callers validate beforehand.
BenchOutcome bench_instance(const Hypergraph& f, std::optional<std::uint64_t> seed, const BenchOptions& options,
                            const std::array<bool, 4>& skip = {});

/// Aligned plain-text rendering of a sweep, for terminals.
void print_bench_table(std::ostream& out, const std::vector<BenchOutcome>& rows);

}  // namespace selfdual
