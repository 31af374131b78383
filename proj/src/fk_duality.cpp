#include "selfdual/fk_duality.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "selfdual/errors.hpp"

namespace selfdual {

namespace {

using Terms = std::vector<EdgeMask>;

// Term volumes are summed as multiples of 2^-62, exactly.
using Volume = unsigned __int128;
constexpr unsigned kVolumeShift = 62;
constexpr Volume kUnitVolume = Volume{1} << kVolumeShift;

bool any_term_within(const Terms& terms, Assignment x) {
  return std::any_of(terms.begin(), terms.end(), [x](EdgeMask e) { return is_subset(e, x); });
}

// Drops duplicates and every term that contains another term.
Terms min_reduce(Terms terms) {
  std::sort(terms.begin(), terms.end(), [](EdgeMask a, EdgeMask b) {
    const unsigned wa = weight(a);
    const unsigned wb = weight(b);
    return wa != wb ? wa < wb : a < b;
  });
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  Terms kept;
  kept.reserve(terms.size());
  for (const EdgeMask t : terms) {
    if (std::none_of(kept.begin(), kept.end(), [t](EdgeMask k) { return is_subset(k, t); })) {
      kept.push_back(t);
    }
  }
  return kept;
}

class DualitySolver {
 public:
  explicit DualitySolver(unsigned n) : full_(universe_mask(n)) {}

  // nullopt when (f, g) are mutually dual, otherwise x with f(x) == g(x̄).
  std::optional<Assignment> solve(const Terms& f, const Terms& g) const {
    std::optional<Assignment> witness = find_witness(f, g);
    if (witness && any_term_within(f, *witness) != any_term_within(g, full_ ^ *witness)) {
      throw std::logic_error("fk_check_dual: produced a witness that does not verify");
    }
    return witness;
  }

 private:
  std::optional<Assignment> find_witness(const Terms& f, const Terms& g) const {
    for (const EdgeMask e : f) {
      for (const EdgeMask t : g) {
        if ((e & t) == 0) {
          return e;
        }
      }
    }

    if (f.size() * g.size() <= 1) {
      return decide_small(f, g);
    }

    Volume volume = 0;
    for (const EdgeMask e : f) {
      volume += kUnitVolume >> weight(e);
    }
    for (const EdgeMask t : g) {
      volume += kUnitVolume >> weight(t);
    }
    if (volume < kUnitVolume) {
      return expectation_walk(f, g);
    }

    const unsigned v = most_frequent_variable(f, g);
    const EdgeMask bit = vertex_bit(v);
    Terms f0, f_union, g0, g_union;
    for (const EdgeMask e : f) {
      if ((e & bit) == 0) {
        f0.push_back(e);
      }
      f_union.push_back(e & ~bit);
    }
    for (const EdgeMask t : g) {
      if ((t & bit) == 0) {
        g0.push_back(t);
      }
      g_union.push_back(t & ~bit);
    }

    if (const auto z = solve(f0, min_reduce(std::move(g_union)))) {
      return *z & ~bit;
    }
    if (const auto z = solve(g0, min_reduce(std::move(f_union)))) {
      return (full_ ^ *z) | bit;
    }
    return std::nullopt;
  }

  // |f| * |g| <= 1, and no disjoint pair.
  std::optional<Assignment> decide_small(const Terms& f, const Terms& g) const {
    // The constant 0 (no terms) is dual exactly to the constant 1 (an empty term).
    const auto is_constant_one = [](const Terms& terms) {
      return std::find(terms.begin(), terms.end(), EdgeMask{0}) != terms.end();
    };
    if (f.empty()) {
      return is_constant_one(g) ? std::nullopt : std::optional<Assignment>(full_);
    }
    if (g.empty()) {
      return is_constant_one(f) ? std::nullopt : std::optional<Assignment>(0);
    }
    const EdgeMask e = f.front();
    const EdgeMask t = g.front();
    if (e == t && weight(e) == 1) {
      return std::nullopt;
    }
    for (EdgeMask rest = e | t; rest != 0; rest &= rest - 1) {
      const Assignment x = rest & (~rest + 1);
      if (is_subset(e, x) == is_subset(t, full_ ^ x)) {
        return x;
      }
    }
    throw std::logic_error("fk_check_dual: no witness among single variables");
  }

  // Fixes variables in ascending id, each to the value that keeps the expected
  // number of satisfied terms (f-terms inside x, g-terms inside x̄) lowest. The
  // expectation starts below 1 and never rises, so it ends at 0.
  Assignment expectation_walk(const Terms& f, const Terms& g) const {
    EdgeMask pending = 0;
    for (const EdgeMask e : f) {
      pending |= e;
    }
    for (const EdgeMask t : g) {
      pending |= t;
    }

    Assignment x = 0;
    EdgeMask fixed = 0;
    const auto expectation = [&f, &g](Assignment xs, EdgeMask fixed_mask) {
      Volume total = 0;
      for (const EdgeMask e : f) {
        if ((e & fixed_mask & ~xs) == 0) {
          total += kUnitVolume >> weight(e & ~fixed_mask);
        }
      }
      for (const EdgeMask t : g) {
        if ((t & fixed_mask & xs) == 0) {
          total += kUnitVolume >> weight(t & ~fixed_mask);
        }
      }
      return total;
    };

    for (EdgeMask rest = pending; rest != 0; rest &= rest - 1) {
      const EdgeMask bit = rest & (~rest + 1);
      fixed |= bit;
      if (expectation(x | bit, fixed) < expectation(x, fixed)) {
        x |= bit;
      }
    }
    return x;
  }

  static unsigned most_frequent_variable(const Terms& f, const Terms& g) {
    std::array<std::size_t, 64> frequency{};
    const auto tally = [&frequency](const Terms& terms) {
      for (const EdgeMask e : terms) {
        for (EdgeMask rest = e; rest != 0; rest &= rest - 1) {
          ++frequency[static_cast<std::size_t>(std::countr_zero(rest))];
        }
      }
    };
    tally(f);
    tally(g);
    // max_element keeps the first maximum, i.e. the lowest id.
    return static_cast<unsigned>(std::max_element(frequency.begin(), frequency.end()) - frequency.begin());
  }

  EdgeMask full_;
};

}  // namespace

DualVerdict fk_check_dual(const Hypergraph& f, const Hypergraph& g, Validation validation) {
  if (f.n() != g.n()) {
    throw std::invalid_argument("fk_check_dual: F and G must share the variable universe");
  }
  if (validation == Validation::kCheck) {
    for (const Hypergraph* h : {&f, &g}) {
      if (const auto sperner = check_sperner(*h); !sperner) {
        const auto [a, b] = *sperner.violation;
        throw PreconditionError("not a Sperner family: edge " + format_edge(a) + " is contained in edge " +
                                    format_edge(b),
                                std::pair{a, b});
      }
    }
  }
  const DualitySolver solver(f.n());
  const auto witness = solver.solve(Terms(f.edges().begin(), f.edges().end()), Terms(g.edges().begin(), g.edges().end()));
  return witness ? DualVerdict::not_dual(*witness) : DualVerdict::dual();
}

SelfDualVerdict fk_selfdual(const Hypergraph& f, Validation validation) {
  if (validation == Validation::kCheck) {
    require_intersecting_sperner(f);
  }
  const DualVerdict verdict = fk_check_dual(f, f, Validation::kTrusted);
  if (verdict.is_dual()) {
    return SelfDualVerdict::self_dual();
  }
  const Assignment x = *verdict.witness();
  // f(x) = f(x̄) = 1 only happens when F is not intersecting.
  if (evaluate(f, x)) {
    return SelfDualVerdict::not_self_dual();
  }
  return SelfDualVerdict::not_self_dual(x);
}

}  // namespace selfdual
