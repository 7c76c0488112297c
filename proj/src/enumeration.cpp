#include "geoconv/enumeration.hpp"

#include <algorithm>
#include <string>

#include "geoconv/classes.hpp"
#include "geoconv/convexity.hpp"
#include "geoconv/error.hpp"
#include "geoconv/separation.hpp"

namespace geoconv {

void sort_canonical(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
}

std::size_t count_separating(const HalfspaceList& list, const VertexSet& a, const VertexSet& b) {
  return static_cast<std::size_t>(std::count_if(list.halfspaces.begin(), list.halfspaces.end(), [&](const VertexSet& h) {
    return a.is_subset_of(h) && !b.intersects(h);
  }));
}

FlashlightResult enumerate_flashlight(const GeodesicSpace& space) {
  FlashlightResult r;
  r.certified = certify(space).any();
  const SeparationOptions options{r.certified};
  const auto n = static_cast<Vertex>(space.order());

  auto extend = [&](const VertexSet& in, const VertexSet& out) {
    ++r.extension_calls;
    const auto outcome = halfspace_separation(space, in, out, options);
    if (outcome.answer == Answer::Unknown) r.incomplete.push_back({in, out});
    return outcome.answer == Answer::Yes;
  };

  VertexSet in(space.order());
  VertexSet out(space.order());
  auto visit = [&](auto&& self, Vertex i) -> void {
    ++r.tree_nodes;
    if (i == n) {
      r.list.halfspaces.push_back(in);
      return;
    }
    in.insert(i);
    if (extend(in, out)) self(self, i + 1);
    in.erase(i);
    out.insert(i);
    if (extend(in, out)) self(self, i + 1);
    out.erase(i);
  };
  visit(visit, 0);
  sort_canonical(r.list.halfspaces);
  return r;
}

HalfspaceList enumerate_bruteforce(const GeodesicSpace& space, std::size_t max_order) {
  const std::size_t n = space.order();
  if (n > std::min(max_order, bruteforce_max_order))
    throw Error(ErrorKind::TooLarge, "brute-force enumeration limited to " +
                                         std::to_string(std::min(max_order, bruteforce_max_order)) +
                                         " vertices");
  HalfspaceList list;
  VertexSet s(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) s.insert(static_cast<Vertex>(v));
      else s.erase(static_cast<Vertex>(v));
    }
    if (is_halfspace(space, s)) list.halfspaces.push_back(s);
  }
  sort_canonical(list.halfspaces);
  return list;
}

} // namespace geoconv
