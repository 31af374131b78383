#include "selfdual/counting.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "selfdual/errors.hpp"

namespace selfdual {

namespace {

bool smaller_edge(EdgeMask a, EdgeMask b) {
  const unsigned wa = weight(a);
  const unsigned wb = weight(b);
  return wa != wb ? wa < wb : a < b;
}

// Next non-empty subset of `set` after `current` in ascending numeric order;
// 0 once the subsets are exhausted.
constexpr EdgeMask next_subset(EdgeMask current, EdgeMask set) { return ((current | ~set) + 1) & set; }

// Appends H2 = (H - (e \ s)) \ N(s) to `out`, deduplicated, and returns the
// number of vertices of H - (e \ s) outside V(H2) ∪ s. Returns nullopt, with
// `out` restored, when H2 would contain an empty edge.
std::optional<unsigned> append_residual(std::span<const EdgeMask> edges, EdgeMask e, EdgeMask s,
                                        std::vector<EdgeMask>& out) {
  const std::size_t start = out.size();
  const EdgeMask removed = e & ~s;
  EdgeMask h1_vertices = 0;
  EdgeMask h2_vertices = 0;
  for (const EdgeMask edge : edges) {
    const EdgeMask reduced = edge & ~removed;
    h1_vertices |= reduced;
    if ((reduced & s) != 0) {
      continue;
    }
    if (reduced == 0) {
      out.resize(start);
      return std::nullopt;
    }
    h2_vertices |= reduced;
    out.push_back(reduced);
  }
  const auto tail = out.begin() + static_cast<std::ptrdiff_t>(start);
  std::sort(tail, out.end());
  out.erase(std::unique(tail, out.end()), out.end());
  return weight(h1_vertices & ~(h2_vertices | s));
}

// Recursive counter over edge lists stored back to back in one buffer, so a
// recursion step costs no allocation once the buffer has grown.
class HitCountEngine {
 public:
  HitCount count(std::span<const EdgeMask> edges) {
    if (std::find(edges.begin(), edges.end(), EdgeMask{0}) != edges.end()) {
      return 0;
    }
    arena_.assign(edges.begin(), edges.end());
    return count_range(0, arena_.size());
  }

 private:
  HitCount count_range(std::size_t begin, std::size_t end) {
    if (begin == end) {
      return 1;
    }
    if (end - begin == 1) {
      return (HitCount{1} << weight(arena_[begin])) - 1;
    }

    EdgeMask vertices = 0;
    for (std::size_t i = begin; i < end; ++i) {
      vertices |= arena_[i];
    }
    EdgeMask component = flood(begin, end, arena_[begin]);
    if (component == vertices) {
      return count_component(begin, end);
    }

    // Several components: copy each one's edges above the current top, in
    // order of first appearance, and multiply their counts.
    const std::size_t top = arena_.size();
    arena_.reserve(top + (end - begin));
    HitCount total = 1;
    for (EdgeMask rest = vertices; rest != 0 && total != 0; rest &= ~component) {
      if (rest != vertices) {
        const auto seed = std::find_if(arena_.begin() + static_cast<std::ptrdiff_t>(begin),
                                       arena_.begin() + static_cast<std::ptrdiff_t>(end),
                                       [rest](EdgeMask e) { return (e & rest) != 0; });
        component = flood(begin, end, *seed);
      }
      const std::size_t first = arena_.size();
      for (std::size_t i = begin; i < end; ++i) {
        if ((arena_[i] & component) != 0) {
          arena_.push_back(arena_[i]);
        }
      }
      total *= arena_.size() - first == 1 ? (HitCount{1} << weight(arena_[first])) - 1
                                          : count_component(first, arena_.size());
    }
    arena_.resize(top);
    return total;
  }

  // Vertices of the component containing `seed`.
  EdgeMask flood(std::size_t begin, std::size_t end, EdgeMask seed) const {
    EdgeMask reached = seed;
    for (EdgeMask previous = 0; previous != reached;) {
      previous = reached;
      for (std::size_t i = begin; i < end; ++i) {
        if ((arena_[i] & reached) != 0) {
          reached |= arena_[i];
        }
      }
    }
    return reached;
  }

  HitCount count_component(std::size_t begin, std::size_t end) {
    EdgeMask pivot = arena_[begin];
    for (std::size_t i = begin + 1; i < end; ++i) {
      if (smaller_edge(arena_[i], pivot)) {
        pivot = arena_[i];
      }
    }
    HitCount sum = 0;
    const std::size_t top = arena_.size();
    for (EdgeMask s = next_subset(0, pivot); s != 0; s = next_subset(s, pivot)) {
      // The residual is appended to the buffer it is read from.
      arena_.reserve(arena_.size() + (end - begin));
      const std::span<const EdgeMask> component(arena_.data() + begin, end - begin);
      const auto free_vertices = append_residual(component, pivot, s, arena_);
      if (!free_vertices) {
        continue;
      }
      sum += (HitCount{1} << *free_vertices) * count_range(top, arena_.size());
      arena_.resize(top);
    }
    return sum;
  }

  std::vector<EdgeMask> arena_;
};

}  // namespace

HitCount count_hit_subset(const Hypergraph& h, EdgeMask e, EdgeMask s, const HitCounter& recurse) {
  if (h.empty()) {
    throw ContractError("count_hit_subset: hypergraph is empty");
  }
  if (s == 0) {
    throw ContractError("count_hit_subset: s is empty");
  }
  if (!is_subset(s, e)) {
    throw ContractError("count_hit_subset: " + format_edge(s) + " is not a subset of " + format_edge(e));
  }
  if (!h.contains(e)) {
    throw ContractError("count_hit_subset: " + format_edge(e) + " is not an edge");
  }

  std::vector<EdgeMask> residual;
  const auto free_vertices = append_residual(h.edges(), e, s, residual);
  if (!free_vertices) {
    return 0;
  }
  return (HitCount{1} << *free_vertices) * recurse(Hypergraph(h.n(), std::move(residual)));
}

HitCount count_hitting_sets(const Hypergraph& h) {
  HitCountEngine engine;
  return engine.count(h.edges());
}

HitCount count_zero_points(const Hypergraph& f) {
  const unsigned free_variables = f.n() - weight(occupied_vertices(f));
  return count_hitting_sets(f) << free_variables;
}

SelfDualVerdict selfdual_by_count(const Hypergraph& f, Validation validation) {
  if (validation == Validation::kCheck) {
    require_intersecting_sperner(f);
  }
  if (f.n() == 0) {
    return SelfDualVerdict::not_self_dual();
  }
  const HitCount half = HitCount{1} << (f.n() - 1);
  return count_zero_points(f) == half ? SelfDualVerdict::self_dual() : SelfDualVerdict::not_self_dual();
}

}  // namespace selfdual
