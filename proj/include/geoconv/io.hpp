#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geoconv/graph.hpp"
#include "geoconv/matroid.hpp"

namespace geoconv {

/// A parsed graph together with the original vertex labels.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels; ///< labels[id]

  std::optional<Vertex> find(std::string_view label) const;
  /// True when labels are exactly "0".."n-1".
  bool identity_labels() const;
};

/// Graph text format:
///
///     # comment
///     n m
///     u v      (m lines)
///
/// Labels are arbitrary whitespace-free tokens. When every label is an
/// integer in 0..n-1 the ids are used as-is; otherwise ids follow the order of
/// first appearance. Throws Error(Parse | SelfLoop | DuplicateEdge |
/// NotConnected) with the offending line number in the message.
LabeledGraph parse_graph(std::string_view text);

/// Matroid text format: header "n r", then one basis per line as r
/// space-separated elements of 0..n-1. The exchange property is validated.
Matroid parse_matroid(std::string_view text, const MatroidLimits& limits = {});

/// Canonical graph text: header, then edges "u v" with u < v, sorted.
std::string format_graph(const Graph& g);
std::string format_matroid(const Matroid& m);

namespace generators {

Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph hypercube(std::size_t dimension);
/// K_{2,2,2} with antipodal pairs (0,3), (1,4), (2,5).
Graph octahedron();

} // namespace generators

} // namespace geoconv
