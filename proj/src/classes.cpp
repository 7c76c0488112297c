#include "geoconv/classes.hpp"

#include "geoconv/convexity.hpp"
#include "geoconv/error.hpp"

namespace geoconv {

std::string_view to_string(GraphClass c) {
  switch (c) {
  case GraphClass::TriangleCondition: return "triangle_condition";
  case GraphClass::QuadrangleCondition: return "quadrangle_condition";
  case GraphClass::WeaklyModular: return "weakly_modular";
  case GraphClass::Meshed: return "meshed";
  case GraphClass::PseudoModular: return "pseudo_modular";
  case GraphClass::PseudoModular3Helly: return "pseudo_modular_3helly";
  case GraphClass::NoInducedC4: return "no_induced_c4";
  case GraphClass::NoInducedC5: return "no_induced_c5";
  case GraphClass::Bridged: return "bridged";
  case GraphClass::WeaklyBridged: return "weakly_bridged";
  case GraphClass::ConvexBalls: return "convex_balls";
  case GraphClass::SimpleDescent: return "simple_descent";
  case GraphClass::IntervalCondition: return "interval_condition";
  case GraphClass::PositioningCondition: return "positioning_condition";
  case GraphClass::MatroidBasisCandidate: return "matroid_basis_candidate";
  }
  return "unknown";
}

namespace {

ClassReport pass(GraphClass c) { return {c, true, std::nullopt, {}}; }

ClassReport fail(GraphClass c, std::vector<std::int32_t> witness) {
  return {c, false, c, std::move(witness)};
}

// Relabel a failed sub-report as a failure of the composite class.
ClassReport as(GraphClass c, ClassReport sub) {
  sub.graph_class = c;
  return sub;
}

// Is some common neighbour of v and w at distance `target` from u?
bool has_common_neighbor_at(const GeodesicSpace& s, Vertex u, Vertex v, Vertex w,
                            std::int32_t target) {
  const auto common = s.graph().neighborhood(v) & s.graph().neighborhood(w);
  for (Vertex x = common.first(); x >= 0; x = common.next(x + 1))
    if (s.distance(u, x) == target) return true;
  return false;
}

ClassReport find_induced_cycle_report(const Graph& g, int length) {
  const auto c = length == 4 ? GraphClass::NoInducedC4 : GraphClass::NoInducedC5;
  auto cycle = find_induced_cycle(g, length);
  if (cycle.empty()) return pass(c);
  return fail(c, {cycle.begin(), cycle.end()});
}

} // namespace

ClassReport satisfies_tc(const GeodesicSpace& space) {
  const auto n = static_cast<Vertex>(space.order());
  for (Vertex u = 0; u < n; ++u) {
    for (const Edge& e : space.graph().edges()) {
      const auto k = space.distance(u, e.u);
      if (k > 1 && k == space.distance(u, e.v) && !has_common_neighbor_at(space, u, e.u, e.v, k - 1))
        return fail(GraphClass::TriangleCondition, {u, e.u, e.v});
    }
  }
  return pass(GraphClass::TriangleCondition);
}

ClassReport satisfies_qc(const GeodesicSpace& space) {
  const auto& g = space.graph();
  const auto n = static_cast<Vertex>(space.order());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const auto k = space.distance(u, v);
      if (k < 2) continue;
      for (Vertex w = v + 1; w < n; ++w) {
        if (g.adjacent(v, w) || space.distance(u, w) != k) continue;
        const auto common = g.neighborhood(v) & g.neighborhood(w);
        Vertex z = -1;
        for (Vertex c = common.first(); c >= 0; c = common.next(c + 1)) {
          if (space.distance(u, c) == k + 1) {
            z = c;
            break;
          }
        }
        if (z >= 0 && !has_common_neighbor_at(space, u, v, w, k - 1))
          return fail(GraphClass::QuadrangleCondition, {u, v, w, z});
      }
    }
  }
  return pass(GraphClass::QuadrangleCondition);
}

ClassReport is_weakly_modular(const GeodesicSpace& space) {
  if (auto r = satisfies_tc(space); !r.holds) return as(GraphClass::WeaklyModular, r);
  if (auto r = satisfies_qc(space); !r.holds) return as(GraphClass::WeaklyModular, r);
  return pass(GraphClass::WeaklyModular);
}

ClassReport is_meshed(const GeodesicSpace& space) {
  const auto& g = space.graph();
  const auto n = static_cast<Vertex>(space.order());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w = v + 1; w < n; ++w) {
        if (space.distance(v, w) != 2) continue;
        const auto bound = space.distance(u, v) + space.distance(u, w);
        const auto common = g.neighborhood(v) & g.neighborhood(w);
        bool found = false;
        for (Vertex x = common.first(); x >= 0 && !found; x = common.next(x + 1))
          found = 2 * space.distance(u, x) <= bound;
        if (!found) return fail(GraphClass::Meshed, {u, v, w});
      }
    }
  }
  return pass(GraphClass::Meshed);
}

ClassReport is_pseudo_modular_metric(const GeodesicSpace& space) {
  const auto n = static_cast<Vertex>(space.order());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const auto k = space.distance(u, v);
      if (k < 2) continue;
      for (Vertex w = v + 1; w < n; ++w) {
        const auto dvw = space.distance(v, w);
        if (dvw > 2 || space.distance(u, w) != k) continue;
        if (!has_common_neighbor_at(space, u, v, w, k - 1))
          return fail(GraphClass::PseudoModular, {u, v, w});
      }
    }
  }
  return pass(GraphClass::PseudoModular);
}

ClassReport is_pseudo_modular_3helly(const GeodesicSpace& space) {
  const auto n = static_cast<Vertex>(space.order());
  const auto radii = space.diameter() + 1;
  // ball index p encodes (center p / radii, radius p % radii)
  const auto count = static_cast<std::int32_t>(n) * radii;
  std::vector<VertexSet> balls;
  balls.reserve(static_cast<std::size_t>(count));
  for (std::int32_t p = 0; p < count; ++p) balls.push_back(space.ball(p / radii, p % radii));
  auto meets = [&](std::int32_t p, std::int32_t q) {
    return space.distance(p / radii, q / radii) <= p % radii + q % radii;
  };
  for (std::int32_t p = 0; p < count; ++p) {
    for (std::int32_t q = p + 1; q < count; ++q) {
      if (!meets(p, q)) continue;
      const auto pq = balls[static_cast<std::size_t>(p)] & balls[static_cast<std::size_t>(q)];
      for (std::int32_t t = q + 1; t < count; ++t) {
        if (meets(p, t) && meets(q, t) && !pq.intersects(balls[static_cast<std::size_t>(t)]))
          return fail(GraphClass::PseudoModular3Helly,
                      {p / radii, p % radii, q / radii, q % radii, t / radii, t % radii});
      }
    }
  }
  return pass(GraphClass::PseudoModular3Helly);
}

ClassReport is_bridged(const GeodesicSpace& space) {
  if (auto r = is_weakly_modular(space); !r.holds) return as(GraphClass::Bridged, r);
  if (auto r = find_induced_cycle_report(space.graph(), 4); !r.holds) return as(GraphClass::Bridged, r);
  if (auto r = find_induced_cycle_report(space.graph(), 5); !r.holds) return as(GraphClass::Bridged, r);
  return pass(GraphClass::Bridged);
}

ClassReport is_weakly_bridged(const GeodesicSpace& space) {
  if (auto r = is_weakly_modular(space); !r.holds) return as(GraphClass::WeaklyBridged, r);
  if (auto r = find_induced_cycle_report(space.graph(), 4); !r.holds)
    return as(GraphClass::WeaklyBridged, r);
  return pass(GraphClass::WeaklyBridged);
}

ClassReport has_convex_balls(const GeodesicSpace& space) {
  const auto n = static_cast<Vertex>(space.order());
  for (Vertex v = 0; v < n; ++v)
    for (std::int32_t k = 0; k <= space.diameter(); ++k)
      if (!is_convex(space, space.ball(v, k))) return fail(GraphClass::ConvexBalls, {v, k});
  return pass(GraphClass::ConvexBalls);
}

ClassReport satisfies_k_sd(const GeodesicSpace& space, int max_clique) {
  if (max_clique < 1) throw Error(ErrorKind::InvalidArgument, "clique bound must be at least 1");
  const auto& g = space.graph();
  const auto n = static_cast<Vertex>(space.order());
  std::vector<Vertex> clique;
  std::optional<ClassReport> failure;

  for (Vertex v = 0; v < n && !failure; ++v) {
    const auto ecc = space.distances().eccentricity(v);
    for (std::int32_t i = 1; i < ecc && !failure; ++i) {
      const auto outer = space.sphere(v, i + 1);
      const auto inner = space.sphere(v, i);
      // candidates: vertices of the outer sphere adjacent to every clique member
      // so far; below: lower-sphere vertices adjacent to all of them
      auto extend = [&](auto&& self, const VertexSet& candidates, const VertexSet& below,
                        Vertex from) -> void {
        for (Vertex a = candidates.next(from); a >= 0 && !failure; a = candidates.next(a + 1)) {
          clique.push_back(a);
          const auto down = below & g.neighborhood(a);
          if (down.empty()) {
            std::vector<std::int32_t> w{v, i};
            w.insert(w.end(), clique.begin(), clique.end());
            failure = fail(GraphClass::SimpleDescent, std::move(w));
          } else if (static_cast<int>(clique.size()) < max_clique) {
            self(self, candidates & g.neighborhood(a), down, a + 1);
          }
          clique.pop_back();
        }
      };
      extend(extend, outer, inner, 0);
    }
  }
  return failure ? *failure : pass(GraphClass::SimpleDescent);
}

ClassReport satisfies_ic(const GeodesicSpace& space) {
  const auto& g = space.graph();
  const auto n = static_cast<Vertex>(space.order());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (space.distance(u, v) != 2) continue;
      const auto& iv = space.interval(u, v);
      const auto sub = induced_subgraph(g, iv);
      const auto deg = sub.degrees();
      auto all_equal = [&](std::size_t d) {
        for (auto x : deg)
          if (x != d) return false;
        return true;
      };
      bool ok = false;
      switch (sub.order()) {
      case 4: ok = all_equal(2); break; // square
      case 5: { // pyramid: one apex of degree 4 over a square base
        int apex = 0, base = 0;
        for (auto x : deg) {
          if (x == 4) ++apex;
          else if (x == 3) ++base;
        }
        ok = apex == 1 && base == 4;
        break;
      }
      case 6: ok = all_equal(4); break; // octahedron
      default: break;
      }
      if (!ok) return fail(GraphClass::IntervalCondition, {u, v});
    }
  }
  return pass(GraphClass::IntervalCondition);
}

std::vector<Square> squares(const Graph& g) {
  std::vector<Square> out;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex v1 = 0; v1 < n; ++v1) {
    const auto nb = g.neighbors(v1);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Vertex v2 = nb[i];
      if (v2 < v1) continue;
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vertex v4 = nb[j];
        if (g.adjacent(v2, v4)) continue;
        const auto opposite = g.neighborhood(v2) & g.neighborhood(v4);
        for (Vertex v3 = opposite.next(v1 + 1); v3 >= 0; v3 = opposite.next(v3 + 1))
          if (!g.adjacent(v1, v3)) out.push_back({v1, v2, v3, v4});
      }
    }
  }
  return out;
}

ClassReport satisfies_pc(const GeodesicSpace& space) {
  const auto n = static_cast<Vertex>(space.order());
  for (const auto& sq : squares(space.graph())) {
    for (Vertex u = 0; u < n; ++u) {
      if (space.distance(u, sq[0]) + space.distance(u, sq[2]) !=
          space.distance(u, sq[1]) + space.distance(u, sq[3]))
        return fail(GraphClass::PositioningCondition, {sq[0], sq[1], sq[2], sq[3], u});
    }
  }
  return pass(GraphClass::PositioningCondition);
}

ClassReport is_matroid_basis_graph_candidate(const GeodesicSpace& space) {
  // GeodesicSpace guarantees connectivity.
  if (auto r = satisfies_ic(space); !r.holds) return as(GraphClass::MatroidBasisCandidate, r);
  if (auto r = satisfies_pc(space); !r.holds) return as(GraphClass::MatroidBasisCandidate, r);
  return pass(GraphClass::MatroidBasisCandidate);
}

Certificate certify(const GeodesicSpace& space) {
  Certificate c;
  c.weakly_bridged = is_weakly_bridged(space).holds;
  c.pseudo_modular = is_pseudo_modular_metric(space).holds;
  c.matroid_basis = is_matroid_basis_graph_candidate(space).holds;
  return c;
}

std::vector<ClassReport> classify(const GeodesicSpace& space) {
  return {
      satisfies_tc(space),
      satisfies_qc(space),
      is_weakly_modular(space),
      is_meshed(space),
      is_pseudo_modular_metric(space),
      is_pseudo_modular_3helly(space),
      find_induced_cycle_report(space.graph(), 4),
      find_induced_cycle_report(space.graph(), 5),
      is_bridged(space),
      is_weakly_bridged(space),
      has_convex_balls(space),
      satisfies_k_sd(space, 3),
      satisfies_ic(space),
      satisfies_pc(space),
      is_matroid_basis_graph_candidate(space),
  };
}

} // namespace geoconv
