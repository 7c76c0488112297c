#include "geoconv/convexity.hpp"

#include <vector>

namespace geoconv {

namespace {

// Worklist closure: pairs inside `done` are already closed.
VertexSet close(const GeodesicSpace& space, VertexSet out, std::vector<Vertex> done,
                std::vector<Vertex> pending) {
  while (!pending.empty()) {
    const Vertex w = pending.back();
    pending.pop_back();
    for (Vertex u : done) {
      const VertexSet fresh = space.interval(u, w) - out;
      if (!fresh.empty()) {
        out |= fresh;
        fresh.for_each([&](Vertex x) { pending.push_back(x); });
      }
    }
    done.push_back(w);
  }
  return out;
}

} // namespace

VertexSet hull(const GeodesicSpace& space, const VertexSet& s) {
  return close(space, s, {}, s.members());
}

VertexSet hull_extend(const GeodesicSpace& space, const VertexSet& convex_base, const VertexSet& extra) {
  return close(space, convex_base | extra, convex_base.members(), (extra - convex_base).members());
}

bool is_convex(const GeodesicSpace& space, const VertexSet& s) {
  const auto members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!space.interval(members[i], members[j]).is_subset_of(s)) return false;
  return true;
}

bool is_locally_convex(const GeodesicSpace& space, const VertexSet& s) {
  if (!induces_connected(space.graph(), s)) return false;
  const auto members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (space.distance(members[i], members[j]) == 2 &&
          !space.interval(members[i], members[j]).is_subset_of(s))
        return false;
  return true;
}

bool is_halfspace(const GeodesicSpace& space, const VertexSet& s) {
  return is_convex(space, s) && is_convex(space, s.complement());
}

} // namespace geoconv
