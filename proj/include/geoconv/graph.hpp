#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "geoconv/vertex_set.hpp"

namespace geoconv {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..order()-1.
///
/// Simplicity (no loops, no parallel edges) is enforced on construction.
/// Connectivity is enforced where distances are needed, see
/// all_pairs_distances() and GeodesicSpace.
class Graph {
public:
  Graph() = default;

  static Graph from_edges(std::size_t order, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  /// Sorted neighbour list.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  const VertexSet& neighborhood(Vertex v) const { return neighborhood_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex u, Vertex v) const { return neighborhood_[static_cast<std::size_t>(u)].contains(v); }
  std::size_t degree(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }

  /// Edges with u < v in lexicographic order.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  VertexSet all_vertices() const { return VertexSet::full(order()); }
  VertexSet no_vertices() const { return VertexSet(order()); }

private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexSet> neighborhood_;
  std::vector<Edge> edges_;
};

/// Hop distances between every pair of vertices.
class DistanceMatrix {
public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t order, std::vector<std::int32_t> data)
      : order_(order), data_(std::move(data)) {}

  std::size_t order() const noexcept { return order_; }
  std::int32_t operator()(Vertex u, Vertex v) const {
    return data_[static_cast<std::size_t>(u) * order_ + static_cast<std::size_t>(v)];
  }
  std::span<const std::int32_t> row(Vertex u) const {
    return std::span(data_).subspan(static_cast<std::size_t>(u) * order_, order_);
  }

  std::int32_t eccentricity(Vertex v) const;
  std::int32_t diameter() const;

private:
  std::size_t order_ = 0;
  std::vector<std::int32_t> data_;
};

/// BFS from every vertex. Throws Error(NotConnected) on a disconnected graph.
DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);
/// Whether the subgraph induced by s is connected (the empty set counts as connected).
bool induces_connected(const Graph& g, const VertexSet& s);

/// Induced subgraph with its own 0-based ids; vertices[i] is the original id
/// of new vertex i. May be disconnected.
struct InducedSubgraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  std::size_t order() const noexcept { return vertices.size(); }
  std::vector<std::size_t> degrees() const;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Whether some `length` vertices induce a chordless cycle. length must be 4 or 5.
bool has_induced_cycle(const Graph& g, int length);
/// First induced cycle of the given length in lexicographic subset order, as a
/// sorted vertex list; empty if none.
std::vector<Vertex> find_induced_cycle(const Graph& g, int length);

bool is_clique(const Graph& g, const VertexSet& s);

/// Graph plus its distance matrix and the table of geodesic intervals.
///
/// Every convexity routine runs on this: distances are computed once.
class GeodesicSpace {
public:
  static constexpr std::size_t max_order = 1024;

  explicit GeodesicSpace(Graph g);

  const Graph& graph() const noexcept { return graph_; }
  const DistanceMatrix& distances() const noexcept { return dist_; }
  std::size_t order() const noexcept { return graph_.order(); }
  std::int32_t distance(Vertex u, Vertex v) const { return dist_(u, v); }
  std::int32_t diameter() const noexcept { return diameter_; }

  /// I(u,v): vertices on some shortest u-v path.
  const VertexSet& interval(Vertex u, Vertex v) const;

  VertexSet ball(Vertex v, std::int32_t radius) const;
  VertexSet sphere(Vertex v, std::int32_t radius) const;
  /// Union of balls of the given radius around members of x. x must be nonempty.
  VertexSet ball_of_set(const VertexSet& x, std::int32_t radius) const;

  /// min over a in a, b in b of d(a,b).
  std::int32_t set_distance(const VertexSet& a, const VertexSet& b) const;

  /// Lexicographically smallest shortest path from a to b (first vertex in a,
  /// last in b). Both sets nonempty and disjoint.
  std::vector<Vertex> shortest_connecting_path(const VertexSet& a, const VertexSet& b) const;

  VertexSet all_vertices() const { return graph_.all_vertices(); }
  VertexSet no_vertices() const { return graph_.no_vertices(); }

private:
  std::size_t slot(Vertex u, Vertex v) const;

  Graph graph_;
  DistanceMatrix dist_;
  std::int32_t diameter_ = 0;
  std::vector<VertexSet> intervals_; // upper triangle incl. diagonal
};

} // namespace geoconv
