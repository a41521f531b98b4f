#pragma once

// Simple graphs, subset families and their disjointness graphs.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace diagramma {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple graph: no loops, no multi-edges.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t vertices);
  /// Throws InvalidGraph on loops, out-of-range endpoints or repeated edges.
  SimpleGraph(std::size_t vertices, const std::vector<Edge>& edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return adjacency_.at(u).at(v) != 0; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_.at(v); }
  std::size_t degree(Vertex v) const { return neighbors_.at(v).size(); }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  void add_edge(Vertex u, Vertex v);

  const std::vector<std::string>& tags() const noexcept { return tags_; }
  void set_tags(std::vector<std::string> tags);

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<char>> adjacency_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::string> tags_;
  std::size_t edge_count_ = 0;
};

/// Ordered list of distinct nonempty subsets of {1..n}; each stored sorted.
struct SubsetFamily {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> sets;

  /// Throws EmptySubset, OutOfRange or DuplicateSubset.
  void validate() const;
};

SimpleGraph disjointness_graph(const SubsetFamily& family);

SimpleGraph opposite_graph(const SimpleGraph& g);

struct Realization {
  SubsetFamily family;
  /// vertex_map[v] is the index in family.sets realizing vertex v of G.
  std::vector<std::size_t> vertex_map;
};

/// Realizes G as the disjointness graph of a subset family. The ground set
/// numbers the edges of the opposite graph first, then one private element per
/// vertex so that no subset is empty; two isolated vertices map to {{1},{1,2}}.
/// The result is checked edge by edge (RealizationCheckFailed otherwise).
Realization realize_as_disjointness(const SimpleGraph& g);

/// Vertices are the pairs {i<j} of [n] in lexicographic order, tagged "i,j";
/// edges join disjoint pairs.
SimpleGraph pvt_graph(std::size_t n);

/// Index of the pair {i<j} (1-based) among the vertices of pvt_graph(n).
Vertex pvt_pair_index(std::size_t n, std::size_t i, std::size_t j);

/// True when `cycle` lists an induced (chordless) cycle of G.
bool is_induced_cycle(const SimpleGraph& g, const std::vector<Vertex>& cycle);

/// Searches for an induced cycle of odd length >= 5 with at most `max_length`
/// vertices. The returned witness has been verified with is_induced_cycle.
std::optional<std::vector<Vertex>> find_induced_odd_cycle(const SimpleGraph& g,
                                                          std::size_t max_length = 11);

/// Backtracking isomorphism search; returns map[v of a] = vertex of b.
std::optional<std::vector<Vertex>> find_isomorphism(const SimpleGraph& a, const SimpleGraph& b);

/// Text format: `n <V>` then `e <u> <v>` lines (0-based). Optional
/// `tag <v> <text>` lines. Blank lines and `#` comments are ignored.
SimpleGraph read_graph(std::istream& in);
SimpleGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const SimpleGraph& g);

}  // namespace diagramma
