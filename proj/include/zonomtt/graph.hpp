#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zonomtt/matrix.hpp"

namespace zonomtt {

/// Directed multigraph on vertices [1..n] with optional rational edge weights.
struct Graph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (tail, head), 1-based
  std::optional<std::vector<Rat>> weights;

  std::size_t edge_count() const { return edges.size(); }
  bool is_connected() const;
};

/// Parses the graph file format: first line the vertex count, then one edge
/// per line as `tail head [weight]`; `#` lines and blank lines are skipped.
Graph parse_graph(const std::string& text);

/// Signed vertex-edge incidence matrix: +1 at the head, -1 at the tail,
/// zero columns for loops.
IntMat incidence_matrix(const Graph& g);

IntMat laplacian(const Graph& g);
RatMat weighted_laplacian(const Graph& g);

/// Exact spanning tree count by deletion-contraction; 0 for disconnected input.
Int spanning_tree_count(const Graph& g);

/// Sum over spanning trees of the product of edge weights.
Rat weighted_tree_sum(const Graph& g);

/// Incidence matrix with one row deleted; full row rank and unimodular for
/// connected input.
IntMat reduced_incidence(const Graph& g, std::size_t drop_vertex);

/// Matrix file format: first line `rows cols`, then rows of integers or p/q.
RatMat parse_matrix(const std::string& text);
std::string format_matrix(const RatMat& m);

}  // namespace zonomtt
