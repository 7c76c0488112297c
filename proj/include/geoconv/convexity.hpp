#pragma once

#include "geoconv/graph.hpp"

namespace geoconv {

/// Geodesic convex hull: least superset of s closed under intervals.
/// hull(empty) is empty.
VertexSet hull(const GeodesicSpace& space, const VertexSet& s);

/// hull(convex_base + extra), assuming convex_base is already convex.
VertexSet hull_extend(const GeodesicSpace& space, const VertexSet& convex_base, const VertexSet& extra);

bool is_convex(const GeodesicSpace& space, const VertexSet& s);

/// Connected induced subgraph that contains I(x,y) for every pair of its
/// members at distance two. The empty set is treated as locally convex.
bool is_locally_convex(const GeodesicSpace& space, const VertexSet& s);

/// s and its complement are both convex.
bool is_halfspace(const GeodesicSpace& space, const VertexSet& s);

} // namespace geoconv
