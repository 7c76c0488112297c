#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "geoconv/graph.hpp"

namespace geoconv {

enum class GraphClass {
  TriangleCondition,
  QuadrangleCondition,
  WeaklyModular,
  Meshed,
  PseudoModular,
  PseudoModular3Helly,
  NoInducedC4,
  NoInducedC5,
  Bridged,
  WeaklyBridged,
  ConvexBalls,
  SimpleDescent,
  IntervalCondition,
  PositioningCondition,
  MatroidBasisCandidate,
};

std::string_view to_string(GraphClass c);

/// Outcome of a membership check.
///
/// When `holds` is false, `violated` names the elementary condition that
/// failed (which differs from `graph_class` for composite classes) and
/// `witness` lists the vertices (and, for ball conditions, radii) that
/// violate it:
///
///   TriangleCondition      u v w
///   QuadrangleCondition    u v w z
///   Meshed                 u v w
///   PseudoModular          u v w
///   PseudoModular3Helly    v1 r1 v2 r2 v3 r3
///   NoInducedC4/C5         the cycle's vertices, sorted
///   ConvexBalls            v k
///   SimpleDescent          v i a1 .. am   (clique a in sphere i+1 of v)
///   IntervalCondition      u v
///   PositioningCondition   v1 v2 v3 v4 u
struct ClassReport {
  GraphClass graph_class{};
  bool holds = true;
  std::optional<GraphClass> violated;
  std::vector<std::int32_t> witness;
};

ClassReport satisfies_tc(const GeodesicSpace& space);
ClassReport satisfies_qc(const GeodesicSpace& space);
ClassReport is_weakly_modular(const GeodesicSpace& space);
ClassReport is_meshed(const GeodesicSpace& space);
ClassReport is_pseudo_modular_metric(const GeodesicSpace& space);
/// Pseudo-modularity via its ball form: any three pairwise intersecting
/// balls share a vertex.
ClassReport is_pseudo_modular_3helly(const GeodesicSpace& space);
ClassReport is_bridged(const GeodesicSpace& space);
ClassReport is_weakly_bridged(const GeodesicSpace& space);
ClassReport has_convex_balls(const GeodesicSpace& space);
/// Simple descent restricted to cliques of at most max_clique vertices.
ClassReport satisfies_k_sd(const GeodesicSpace& space, int max_clique);
ClassReport satisfies_ic(const GeodesicSpace& space);
ClassReport satisfies_pc(const GeodesicSpace& space);
ClassReport is_matroid_basis_graph_candidate(const GeodesicSpace& space);

using Square = std::array<Vertex, 4>;

/// Induced 4-cycles v1 v2 v3 v4, each once: v1 is the minimum and v2 < v4.
std::vector<Square> squares(const Graph& g);

/// The classes for which halfspace separation is proven complete.
struct Certificate {
  bool weakly_bridged = false;
  bool pseudo_modular = false;
  bool matroid_basis = false;

  bool any() const noexcept { return weakly_bridged || pseudo_modular || matroid_basis; }
};

Certificate certify(const GeodesicSpace& space);

/// Every report above, in declaration order, with SimpleDescent at k = 3.
std::vector<ClassReport> classify(const GeodesicSpace& space);

} // namespace geoconv
