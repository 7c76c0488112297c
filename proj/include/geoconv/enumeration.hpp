#pragma once

#include <cstddef>
#include <vector>

#include "geoconv/graph.hpp"

namespace geoconv {

/// Halfspaces in canonical order (size, then lexicographic membership).
/// Includes the trivial halfspaces: the empty set and V.
struct HalfspaceList {
  std::vector<VertexSet> halfspaces;
};

/// A partial assignment whose extension came back UNKNOWN; its subtree was
/// not explored.
struct IncompleteNode {
  VertexSet in;
  VertexSet out;
};

struct FlashlightResult {
  HalfspaceList list;
  std::size_t extension_calls = 0;
  /// Nodes of the partial-solution tree that were entered (root included).
  std::size_t tree_nodes = 0;
  bool certified = false;
  std::vector<IncompleteNode> incomplete;

  bool complete() const noexcept { return incomplete.empty(); }
};

/// Backtracking over vertices 0..n-1 with halfspace separation as the
/// extension oracle. Output-polynomial on certified graphs; elsewhere every
/// listed set is still a verified halfspace but the list may miss some.
FlashlightResult enumerate_flashlight(const GeodesicSpace& space);

inline constexpr std::size_t bruteforce_max_order = 20;

/// Filters all 2^n subsets. Throws Error(TooLarge) above max_order.
HalfspaceList enumerate_bruteforce(const GeodesicSpace& space, std::size_t max_order = 16);

/// Number of listed halfspaces H with a in H and b disjoint from H.
std::size_t count_separating(const HalfspaceList& list, const VertexSet& a, const VertexSet& b);

void sort_canonical(std::vector<VertexSet>& sets);

} // namespace geoconv
