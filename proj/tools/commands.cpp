#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "selfdual/bench.hpp"
#include "selfdual/counting.hpp"
#include "selfdual/errors.hpp"
#include "selfdual/fk_duality.hpp"
#include "selfdual/generator.hpp"
#include "selfdual/instance_io.hpp"
#include "selfdual/witness_search.hpp"

namespace selfdual::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned parse_unsigned(std::string_view text) {
  unsigned value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw UsageError("expected an unsigned integer, got '" + std::string(text) + "'");
  }
  return value;
}

// "10..13", "10,12,14" or "12".
std::vector<unsigned> parse_sizes(std::string_view text) {
  std::vector<unsigned> sizes;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const unsigned first = parse_unsigned(text.substr(0, dots));
    const unsigned last = parse_unsigned(text.substr(dots + 2));
    if (first > last) {
      throw UsageError("empty size range " + std::string(text));
    }
    for (unsigned n = first; n <= last; ++n) {
      sizes.push_back(n);
    }
    return sizes;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = std::min(text.find(',', start), text.size());
    sizes.push_back(parse_unsigned(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return sizes;
}

std::vector<Algo> parse_algos(std::string_view text) {
  std::vector<Algo> algos;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = std::min(text.find(',', start), text.size());
    const auto name = text.substr(start, comma - start);
    const auto algo = parse_algo(name);
    if (!algo) {
      throw UsageError("unknown algorithm '" + std::string(name) + "' (expected fk, count, brute, search)");
    }
    if (std::find(algos.begin(), algos.end(), *algo) == algos.end()) {
      algos.push_back(*algo);
    }
    start = comma + 1;
  }
  // Always run in CSV column order.
  std::sort(algos.begin(), algos.end());
  return algos;
}

// Runs `body`, mapping library and I/O failures onto exit code 2.
template <typename Body>
int guarded(Body&& body) {
  try {
    return body();
  } catch (const VerdictMismatch& e) {
    std::cerr << "error: verdict disagreement: " << e.what() << '\n';
    return kExitDisagreement;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}

HitCount zero_points_by_evaluation(const Hypergraph& f) {
  const Assignment end = Assignment{1} << f.n();
  HitCount ones = 0;
  for (Assignment x = 0; x < end; ++x) {
    ones += evaluate(f, x) ? 1 : 0;
  }
  return (HitCount{1} << f.n()) - ones;
}

bool witness_holds(const Hypergraph& f, const SelfDualVerdict& verdict) {
  if (!verdict.witness()) {
    return true;
  }
  const Assignment x = *verdict.witness();
  return !evaluate(f, x) && !evaluate(f, complement(x, f.n()));
}

}  // namespace

int run_gen(const GenArgs& args) {
  return guarded([&] {
    if (args.n > kMaxVertices) {
      throw UsageError("n exceeds " + std::to_string(kMaxVertices));
    }
    Hypergraph h;
    std::vector<std::string> comments;
    if (args.family == "binomial") {
      h = binomial_family(args.n);
      comments.push_back("binomial family n=" + std::to_string(args.n) + ": all " + std::to_string((args.n + 1) / 2) +
                         "-subsets");
    } else if (args.family == "random") {
      GenConfig cfg = GenConfig::defaults(args.n, args.seed);
      cfg.trials = args.trials.value_or(cfg.trials);
      cfg.lo = args.lo.value_or(cfg.lo);
      cfg.hi = args.hi.value_or(cfg.hi);
      h = generate(cfg);
      comments = cfg.header_comments();
    } else {
      throw UsageError("unknown family '" + args.family + "' (expected random or binomial)");
    }

    std::string summary = fmt::format("n={} m={}", h.n(), h.size());
    if (args.family == "random") {
      summary += fmt::format(" seed={}", args.seed);
    }
    if (args.output.empty() || args.output == "-") {
      write_instance(std::cout, h, comments);
      std::cerr << summary << '\n';
    } else {
      write_instance_file(args.output, h, comments);
      std::cout << summary << '\n';
    }
    return kExitSelfDual;
  });
}

int run_check(const CheckArgs& args) {
  return guarded([&] {
    const Hypergraph f = read_instance_file(args.file);
    const Validation validation = args.no_validate ? Validation::kTrusted : Validation::kCheck;
    spdlog::debug("check: n={} m={} algo={}", f.n(), f.size(), args.algo);

    std::optional<HitCount> zero_points;
    std::optional<SelfDualVerdict> verdict;
    const auto start = std::chrono::steady_clock::now();
    if (args.algo == "count") {
      verdict = selfdual_by_count(f, validation);
      zero_points = count_zero_points(f);
    } else if (args.algo == "hs-brute") {
      verdict = run_algo(Algo::kBrute, f, validation, args.brute_limit);
      zero_points = brute_count_hitting_sets(f, args.brute_limit) << (f.n() - weight(occupied_vertices(f)));
    } else if (args.algo == "search") {
      verdict = search_witness(f, validation);
    } else if (args.algo == "dual") {
      verdict = algorithm_dual(f, validation, args.brute_limit);
    } else if (args.algo == "fk") {
      verdict = fk_selfdual(f, validation);
    } else {
      throw UsageError("unknown algorithm '" + args.algo + "' (expected count, search, dual, fk, hs-brute)");
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    std::string line = verdict->is_self_dual() ? "self-dual" : "not self-dual";
    if (zero_points) {
      line += ", hit-count " + std::to_string(*zero_points);
    }
    if (verdict->witness()) {
      line += ", witness " + format_assignment(*verdict->witness(), f.n());
    }
    std::cout << line << '\n' << fmt::format("elapsed {:.6f} s\n", elapsed.count());
    return verdict->is_self_dual() ? kExitSelfDual : kExitNotSelfDual;
  });
}

int run_verify(const VerifyArgs& args) {
  return guarded([&] {
    const Hypergraph f = read_instance_file(args.file, ParseOptions{.require_pidnf = true});
    if (f.n() > args.brute_limit) {
      throw SizeLimitError("n = " + std::to_string(f.n()) + " exceeds the brute-force limit " +
                           std::to_string(args.brute_limit));
    }
    const unsigned free_variables = f.n() - weight(occupied_vertices(f));

    std::map<std::string, SelfDualVerdict> verdicts;
    verdicts.emplace("count", selfdual_by_count(f));
    if (!f.empty()) {
      verdicts.emplace("search", search_witness(f));
    }
    verdicts.emplace("dual", algorithm_dual(f, Validation::kCheck, args.brute_limit));
    verdicts.emplace("fk", fk_selfdual(f));
    verdicts.emplace("hs-brute", run_algo(Algo::kBrute, f, Validation::kCheck, args.brute_limit));

    const std::map<std::string, HitCount> counts = {
        {"count", count_zero_points(f)},
        {"hs-brute", brute_count_hitting_sets(f, args.brute_limit) << free_variables},
        {"eval-sum", zero_points_by_evaluation(f)},
    };

    bool agree = true;
    const bool reference = verdicts.begin()->second.is_self_dual();
    for (const auto& [name, verdict] : verdicts) {
      std::string line = fmt::format("{:<9} {}", name, verdict.summary());
      if (verdict.witness()) {
        line += " witness " + format_assignment(*verdict.witness(), f.n());
      }
      if (!witness_holds(f, verdict)) {
        line += " (witness does not verify)";
        agree = false;
      }
      agree = agree && verdict.is_self_dual() == reference;
      std::cout << line << '\n';
    }
    const HitCount reference_count = counts.begin()->second;
    for (const auto& [name, count] : counts) {
      std::cout << fmt::format("{:<9} zero-points {}\n", name, count);
      agree = agree && count == reference_count;
    }
    const bool count_says_self_dual = f.n() > 0 && reference_count == HitCount{1} << (f.n() - 1);
    agree = agree && count_says_self_dual == reference;

    if (!agree) {
      std::cout << "DISAGREEMENT\n";
      return kExitDisagreement;
    }
    std::cout << "all agree: " << (reference ? "self-dual" : "not-self-dual") << '\n';
    return kExitSelfDual;
  });
}

int run_bench(const BenchArgs& args) {
  return guarded([&] {
    BenchOptions options;
    options.algos = parse_algos(args.algos);
    options.repeats = args.repeats;
    options.timeout_seconds = args.timeout;
    options.brute_limit = args.brute_limit;
    const bool wants_brute = std::find(options.algos.begin(), options.algos.end(), Algo::kBrute) != options.algos.end();

    struct Instance {
      Hypergraph h;
      std::optional<std::uint64_t> seed;
    };
    // Checked before generation, which is itself exponential in n.
    const auto admit_size = [&](unsigned n) {
      if (n > kMaxVertices) {
        throw UsageError("n exceeds " + std::to_string(kMaxVertices));
      }
      if (wants_brute && n > options.brute_limit) {
        if (!args.force) {
          throw UsageError("brute force refuses n=" + std::to_string(n) + " beyond its limit " +
                           std::to_string(options.brute_limit) + " (use --force)");
        }
        options.brute_limit = n;
      }
    };

    std::vector<Instance> instances;
    if (!args.inputs.empty()) {
      for (const auto& path : args.inputs) {
        instances.push_back({read_instance_file(path, ParseOptions{.require_pidnf = true}), std::nullopt});
        admit_size(instances.back().h.n());
      }
    } else {
      if (args.sizes.empty()) {
        throw UsageError("bench needs --sizes or --inputs");
      }
      const std::vector<unsigned> sizes = parse_sizes(args.sizes);
      std::for_each(sizes.begin(), sizes.end(), admit_size);
      for (const unsigned n : sizes) {
        GenConfig cfg = GenConfig::defaults(n, args.seed);
        cfg.trials = args.trials.value_or(cfg.trials);
        spdlog::debug("bench: generating n={} trials={}", n, cfg.trials);
        instances.push_back({generate(cfg), args.seed});
      }
    }

    for (const auto& instance : instances) {
      if (instance.h.empty()) {
        throw UsageError("cannot benchmark an instance with no edges (n=" + std::to_string(instance.h.n()) + ")");
      }
    }

    std::ofstream csv_file;
    std::ostream* csv = nullptr;
    if (!args.csv.empty()) {
      if (args.csv == "-") {
        csv = &std::cout;
      } else {
        csv_file.open(args.csv, std::ios::binary);
        if (!csv_file) {
          throw std::runtime_error("cannot write " + args.csv);
        }
        csv = &csv_file;
      }
      *csv << kBenchCsvHeader << '\n';
    }

    std::vector<BenchOutcome> rows;
    std::array<bool, 4> gave_up{};
    for (const auto& instance : instances) {
      BenchOutcome row = bench_instance(instance.h, instance.seed, options, gave_up);
      for (std::size_t i = 0; i < gave_up.size(); ++i) {
        if (row.timed_out[i]) {
          spdlog::warn("{} exceeded {} s at n={}, skipping it for the remaining instances",
                       algo_name(static_cast<Algo>(i)), options.timeout_seconds, instance.h.n());
          gave_up[i] = true;
        }
      }
      if (csv) {
        *csv << format_csv_row(row.record) << '\n' << std::flush;
      }
      rows.push_back(std::move(row));
    }
    print_bench_table(args.csv == "-" ? std::cerr : std::cout, rows);
    return kExitSelfDual;
  });
}

}  // namespace selfdual::cli
