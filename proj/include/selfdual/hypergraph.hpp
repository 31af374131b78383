#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace selfdual {

// Bit i set iff vertex i is a member. Vertex ids are 0-based.
using EdgeMask = std::uint64_t;

// A point of {0,1}^n. Bit i is the value of variable x_i, so the numeric
// value of the mask is the decimal reading of the vector.
using Assignment = std::uint64_t;

inline constexpr unsigned kMaxVertices = 62;

constexpr EdgeMask universe_mask(unsigned n) { return (EdgeMask{1} << n) - 1; }

constexpr EdgeMask vertex_bit(unsigned v) { return EdgeMask{1} << v; }

/// x̄ = 2^n - x - 1.
constexpr Assignment complement(Assignment x, unsigned n) { return universe_mask(n) - x; }

constexpr unsigned weight(Assignment x) { return static_cast<unsigned>(std::popcount(x)); }

constexpr bool is_subset(EdgeMask a, EdgeMask b) { return (a & ~b) == 0; }

/// A finite family of vertex subsets over the universe {0, ..., n-1}.
///
/// Doubles as the term set of a positive DNF: edge e is the conjunction of the
/// variables x_i, i in e. Edges are kept in insertion order with duplicates
/// dropped. An empty edge is representable because structural operations can
/// produce one; it can never be hit, so any hypergraph holding it has no
/// hitting sets. Instances read from disk never contain one.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Throws std::invalid_argument if n > kMaxVertices or an edge has a bit at
  /// position >= n.
  explicit Hypergraph(unsigned n, std::vector<EdgeMask> edges = {});

  unsigned n() const { return n_; }
  std::span<const EdgeMask> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  EdgeMask operator[](std::size_t i) const { return edges_[i]; }

  bool has_empty_edge() const;
  bool contains(EdgeMask edge) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  unsigned n_ = 0;
  std::vector<EdgeMask> edges_;
};

struct EdgePair {
  EdgeMask first = 0;
  EdgeMask second = 0;
  friend bool operator==(const EdgePair&, const EdgePair&) = default;
};

/// Outcome of a pairwise structural check; holds one counterexample on failure.
struct PairCheck {
  std::optional<EdgePair> violation;

  bool ok() const { return !violation.has_value(); }
  explicit operator bool() const { return ok(); }
};

/// f(x) for the positive DNF whose terms are the edges of h.
bool evaluate(const Hypergraph& h, Assignment x);

/// Fails with a disjoint pair (e, t) if some two edges do not intersect.
PairCheck check_intersecting(const Hypergraph& h);

/// Fails with (smaller, larger) if an edge is contained in a distinct edge.
PairCheck check_sperner(const Hypergraph& h);

/// Throws PreconditionError naming the offending pair unless h is a Sperner
/// family of non-empty, pairwise intersecting edges.
void require_intersecting_sperner(const Hypergraph& h);

/// H - p: clears the bits of p in every edge. Edges that collapse onto each
/// other are merged; edges that become empty are kept.
Hypergraph remove_vertices(const Hypergraph& h, EdgeMask p);

/// N_H(s): the edges that intersect s.
Hypergraph neighbourhood(const Hypergraph& h, EdgeMask s);

/// H \ N_H(s): the edges disjoint from s.
Hypergraph outside_neighbourhood(const Hypergraph& h, EdgeMask s);

/// Union of all edges, V(H).
EdgeMask occupied_vertices(const Hypergraph& h);

struct Component {
  Hypergraph edges;
  EdgeMask vertices = 0;
};

/// Components of the vertex/edge incidence graph, ordered by the position of
/// their first edge in h. An empty edge forms a component of its own.
std::vector<Component> connected_components(const Hypergraph& h);

/// "{0,3}" style rendering of a vertex set.
std::string format_edge(EdgeMask e);

/// n-character binary string, variable n-1 first: x = 1, n = 3 gives "001".
std::string format_assignment(Assignment x, unsigned n);

}  // namespace selfdual
