#include "selfdual/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <ostream>

#include <fmt/format.h>

#include "selfdual/counting.hpp"
#include "selfdual/fk_duality.hpp"
#include "selfdual/witness_search.hpp"

namespace selfdual {

namespace {

constexpr std::array<std::string_view, 4> kAlgoNames = {"fk", "count", "brute", "search"};

std::string format_seconds(double seconds) {
  std::array<char, 64> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), seconds);
  return std::string(buffer.data(), end);
}

template <typename T>
T parse_field(std::string_view field, std::string_view what) {
  T value{};
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || end != field.data() + field.size()) {
    throw std::invalid_argument("bad " + std::string(what) + " field '" + std::string(field) + "'");
  }
  return value;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) {
      return fields;
    }
    start = comma + 1;
  }
}

}  // namespace

std::string_view algo_name(Algo algo) { return kAlgoNames[static_cast<std::size_t>(algo)]; }

std::optional<Algo> parse_algo(std::string_view name) {
  for (const Algo algo : kAllAlgos) {
    if (algo_name(algo) == name) {
      return algo;
    }
  }
  return std::nullopt;
}

SelfDualVerdict run_algo(Algo algo, const Hypergraph& f, Validation validation, unsigned brute_limit) {
  switch (algo) {
    case Algo::kFk:
      return fk_selfdual(f, validation);
    case Algo::kCount:
      return selfdual_by_count(f, validation);
    case Algo::kSearch:
      return search_witness(f, validation);
    case Algo::kBrute: {
      if (validation == Validation::kCheck) {
        require_intersecting_sperner(f);
      }
      const unsigned free_variables = f.n() - weight(occupied_vertices(f));
      const HitCount zeros = brute_count_hitting_sets(f, brute_limit) << free_variables;
      return zeros == HitCount{1} << (f.n() - 1) ? SelfDualVerdict::self_dual() : SelfDualVerdict::not_self_dual();
    }
  }
  throw std::logic_error("unknown algorithm");
}

std::string format_csv_row(const BenchRecord& record) {
  std::string row = std::to_string(record.n) + ',' + std::to_string(record.m) + ',';
  if (record.seed) {
    row += std::to_string(*record.seed);
  }
  for (const auto& seconds : record.seconds) {
    row += ',';
    if (seconds) {
      row += format_seconds(*seconds);
    }
  }
  row += ',' + record.verdict;
  return row;
}

BenchRecord parse_csv_row(std::string_view line) {
  if (!line.empty() && line.back() == '\r') {
    line.remove_suffix(1);
  }
  const auto fields = split_commas(line);
  if (fields.size() != 8) {
    throw std::invalid_argument("expected 8 CSV fields, got " + std::to_string(fields.size()));
  }
  BenchRecord record;
  record.n = parse_field<unsigned>(fields[0], "n");
  record.m = parse_field<std::size_t>(fields[1], "m");
  if (!fields[2].empty()) {
    record.seed = parse_field<std::uint64_t>(fields[2], "seed");
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (!fields[3 + i].empty()) {
      record.seconds[i] = parse_field<double>(fields[3 + i], "time");
    }
  }
  record.verdict = std::string(fields[7]);
  if (record.verdict != "self-dual" && record.verdict != "not-self-dual") {
    throw std::invalid_argument("bad verdict field '" + record.verdict + "'");
  }
  return record;
}

BenchOutcome bench_instance(const Hypergraph& f, std::optional<std::uint64_t> seed, const BenchOptions& options,
                            const std::array<bool, 4>& skip) {
  BenchOutcome outcome;
  outcome.record.n = f.n();
  outcome.record.m = f.size();
  outcome.record.seed = seed;

  std::optional<SelfDualVerdict> agreed;
  Algo agreed_by = Algo::kFk;
  const unsigned repeats = std::max(1U, options.repeats);
  for (const Algo algo : options.algos) {
    const auto slot = static_cast<std::size_t>(algo);
    if (skip[slot]) {
      continue;
    }
    std::vector<double> samples;
    std::optional<SelfDualVerdict> verdict;
    for (unsigned r = 0; r < repeats; ++r) {
      const auto start = std::chrono::steady_clock::now();
      const SelfDualVerdict v = run_algo(algo, f, Validation::kTrusted, options.brute_limit);
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      verdict = v;
      if (elapsed.count() > options.timeout_seconds) {
        outcome.timed_out[slot] = true;
        break;
      }
      samples.push_back(elapsed.count());
    }

    if (agreed && agreed->is_self_dual() != verdict->is_self_dual()) {
      throw VerdictMismatch(fmt::format("n={} m={}: {} says {} but {} says {}", f.n(), f.size(), algo_name(agreed_by),
                                        agreed->summary(), algo_name(algo), verdict->summary()));
    }
    if (!agreed) {
      agreed = verdict;
      agreed_by = algo;
    }
    if (outcome.timed_out[slot]) {
      continue;
    }
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    outcome.record.seconds[slot] = samples.size() % 2 == 1 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2;
  }
  outcome.record.verdict = agreed ? agreed->summary() : "";
  return outcome;
}

void print_bench_table(std::ostream& out, const std::vector<BenchOutcome>& rows) {
  out << fmt::format("{:>4} {:>10} {:>12} {:>12} {:>12} {:>12}  {}\n", "n", "m", "fk [s]", "count [s]", "brute [s]",
                     "search [s]", "verdict");
  for (const auto& row : rows) {
    std::string line = fmt::format("{:>4} {:>10}", row.record.n, row.record.m);
    for (std::size_t i = 0; i < 4; ++i) {
      if (row.record.seconds[i]) {
        line += fmt::format(" {:>12.6f}", *row.record.seconds[i]);
      } else {
        line += fmt::format(" {:>12}", row.timed_out[i] ? "timeout" : "-");
      }
    }
    out << line << "  " << row.record.verdict << '\n';
  }
}

}  // namespace selfdual
