#include "selfdual/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "selfdual/errors.hpp"

namespace selfdual {

namespace {

void dedupe_in_order(std::vector<EdgeMask>& edges) {
  if (edges.size() < 2) {
    return;
  }
  std::vector<EdgeMask> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
    return;
  }
  std::unordered_set<EdgeMask> seen;
  seen.reserve(edges.size());
  std::erase_if(edges, [&seen](EdgeMask e) { return !seen.insert(e).second; });
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  // The smaller index stays the root, so roots are first occurrences.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[std::max(a, b)] = std::min(a, b);
    }
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Hypergraph::Hypergraph(unsigned n, std::vector<EdgeMask> edges) : n_(n), edges_(std::move(edges)) {
  if (n > kMaxVertices) {
    throw std::invalid_argument("n exceeds " + std::to_string(kMaxVertices));
  }
  const EdgeMask outside = ~universe_mask(n);
  for (EdgeMask e : edges_) {
    if ((e & outside) != 0) {
      throw std::invalid_argument("edge " + format_edge(e) + " has a vertex outside 0.." + std::to_string(n) + "-1");
    }
  }
  dedupe_in_order(edges_);
}

bool Hypergraph::has_empty_edge() const {
  return std::find(edges_.begin(), edges_.end(), EdgeMask{0}) != edges_.end();
}

bool Hypergraph::contains(EdgeMask edge) const { return std::find(edges_.begin(), edges_.end(), edge) != edges_.end(); }

bool evaluate(const Hypergraph& h, Assignment x) {
  return std::any_of(h.edges().begin(), h.edges().end(), [x](EdgeMask e) { return is_subset(e, x); });
}

PairCheck check_intersecting(const Hypergraph& h) {
  const auto edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    // An empty edge is disjoint from everything, itself included.
    if (edges[i] == 0) {
      return {EdgePair{edges[i], edges[i]}};
    }
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if ((edges[i] & edges[j]) == 0) {
        return {EdgePair{edges[i], edges[j]}};
      }
    }
  }
  return {};
}

PairCheck check_sperner(const Hypergraph& h) {
  const auto edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (is_subset(edges[i], edges[j])) {
        return {EdgePair{edges[i], edges[j]}};
      }
      if (is_subset(edges[j], edges[i])) {
        return {EdgePair{edges[j], edges[i]}};
      }
    }
  }
  return {};
}

void require_intersecting_sperner(const Hypergraph& h) {
  if (h.has_empty_edge()) {
    throw PreconditionError("hypergraph contains an empty edge");
  }
  if (const auto sperner = check_sperner(h); !sperner) {
    const auto [a, b] = *sperner.violation;
    throw PreconditionError("not a Sperner family: edge " + format_edge(a) + " is contained in edge " + format_edge(b),
                            std::pair{a, b});
  }
  if (const auto inter = check_intersecting(h); !inter) {
    const auto [a, b] = *inter.violation;
    throw PreconditionError("not intersecting: edges " + format_edge(a) + " and " + format_edge(b) + " are disjoint",
                            std::pair{a, b});
  }
}

Hypergraph remove_vertices(const Hypergraph& h, EdgeMask p) {
  std::vector<EdgeMask> edges(h.edges().begin(), h.edges().end());
  for (EdgeMask& e : edges) {
    e &= ~p;
  }
  return Hypergraph(h.n(), std::move(edges));
}

Hypergraph neighbourhood(const Hypergraph& h, EdgeMask s) {
  std::vector<EdgeMask> edges;
  std::copy_if(h.edges().begin(), h.edges().end(), std::back_inserter(edges),
               [s](EdgeMask e) { return (e & s) != 0; });
  return Hypergraph(h.n(), std::move(edges));
}

Hypergraph outside_neighbourhood(const Hypergraph& h, EdgeMask s) {
  std::vector<EdgeMask> edges;
  std::copy_if(h.edges().begin(), h.edges().end(), std::back_inserter(edges),
               [s](EdgeMask e) { return (e & s) == 0; });
  return Hypergraph(h.n(), std::move(edges));
}

EdgeMask occupied_vertices(const Hypergraph& h) {
  return std::accumulate(h.edges().begin(), h.edges().end(), EdgeMask{0}, std::bit_or<>{});
}

std::vector<Component> connected_components(const Hypergraph& h) {
  const auto edges = h.edges();
  DisjointSets sets(edges.size());
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> first_edge_of(h.n(), kUnseen);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (EdgeMask rest = edges[i]; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<unsigned>(std::countr_zero(rest));
      if (first_edge_of[v] == kUnseen) {
        first_edge_of[v] = i;
      } else {
        sets.unite(first_edge_of[v], i);
      }
    }
  }

  std::vector<Component> components;
  std::vector<std::size_t> slot(edges.size(), kUnseen);
  std::vector<std::vector<EdgeMask>> grouped;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::size_t root = sets.find(i);
    if (slot[root] == kUnseen) {
      slot[root] = grouped.size();
      grouped.emplace_back();
    }
    grouped[slot[root]].push_back(edges[i]);
  }
  components.reserve(grouped.size());
  for (auto& group : grouped) {
    const EdgeMask vertices = std::accumulate(group.begin(), group.end(), EdgeMask{0}, std::bit_or<>{});
    components.push_back(Component{Hypergraph(h.n(), std::move(group)), vertices});
  }
  return components;
}

std::string format_edge(EdgeMask e) {
  std::string out = "{";
  for (EdgeMask rest = e; rest != 0; rest &= rest - 1) {
    if (out.size() > 1) {
      out += ',';
    }
    out += std::to_string(std::countr_zero(rest));
  }
  out += '}';
  return out;
}

std::string format_assignment(Assignment x, unsigned n) {
  std::string out(n, '0');
  for (unsigned i = 0; i < n; ++i) {
    if ((x >> i) & 1U) {
      out[n - 1 - i] = '1';
    }
  }
  return out;
}

}  // namespace selfdual
