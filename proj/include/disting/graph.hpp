#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "disting/action.hpp"
#include "disting/perm.hpp"

namespace disting {

enum class GraphKind { simple, multigraph, digraph };

/// A graph on at most 10 vertices stored as a dense multiplicity matrix.
/// Simple graphs and multigraphs are symmetric with zero diagonal; digraphs
/// may be arbitrary.
class Graph {
 public:
  static constexpr int kMaxVertices = 10;

  Graph() = default;
  explicit Graph(int n, GraphKind kind = GraphKind::simple);
  /// Simple graph from a 0-indexed edge list.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);

  int order() const { return n_; }
  GraphKind kind() const { return kind_; }
  int at(int u, int v) const { return adj_[static_cast<std::size_t>(u * n_ + v)]; }
  bool adjacent(int u, int v) const { return at(u, v) != 0; }
  /// Sets the multiplicity of (u, v); mirrored for undirected kinds.
  void set(int u, int v, int multiplicity = 1);
  int degree(int v) const;
  int edge_count() const;
  bool is_regular() const;

  /// Image of the graph under a vertex relabeling: edge (u, v) becomes (p(u), p(v)).
  Graph relabeled(const Permutation& p) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  GraphKind kind_ = GraphKind::simple;
  std::vector<std::uint8_t> adj_;
};

/// graph6 decoding; simple graphs with at most 62 vertices in the format, at
/// most 10 accepted here. Throws std::invalid_argument on malformed input.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// "n m" header followed by m lines "u v", 1-indexed.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);
/// DOT rendering; vertex labels carry the colors of `labeling` when given.
std::string write_dot(const Graph& g, const Labeling* labeling = nullptr);

/// All vertex permutations preserving multiplicities (and direction for
/// digraphs), found by backtracking with degree pruning.
PermGroup automorphism_group(const Graph& g);

/// Lexicographically minimal relabeling of a simple graph, comparing the
/// graph6 upper-triangle bit string. n <= 8.
Graph canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);

/// One representative per isomorphism class of simple graphs on n <= 7
/// vertices, each in canonical form, sorted by canonical graph6 bit string.
std::vector<Graph> enumerate_graphs(int n);

Graph complement(const Graph& g);
/// Induced subgraph on `vertices` (sorted), renumbered in increasing order.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// Aut(G) acting on the vertices.
GroupAction automorphism_action(const Graph& g);
int graph_distinguishing_number(const Graph& g);
DistinguishingResult graph_distinguishing(const Graph& g);

/// True iff every induced subgraph on a nonempty proper vertex subset has a
/// distinguishing number different from the graph's. n <= 7.
bool is_distinguishing_critical(const Graph& g);

}  // namespace disting
