#include <doctest.h>

#include <algorithm>

#include "geoconv/classes.hpp"
#include "geoconv/error.hpp"
#include "geoconv/io.hpp"
#include "geoconv/matroid.hpp"
#include "support/corpus.hpp"

using namespace geoconv;
using namespace geoconv::testing;

namespace {

using Witness = std::vector<std::int32_t>;

const GeodesicSpace& c4() { static const GeodesicSpace s(generators::cycle(4)); return s; }
const GeodesicSpace& c5() { static const GeodesicSpace s(generators::cycle(5)); return s; }
const GeodesicSpace& c6() { static const GeodesicSpace s(generators::cycle(6)); return s; }
const GeodesicSpace& k4() { static const GeodesicSpace s(generators::complete(4)); return s; }
const GeodesicSpace& oct() { static const GeodesicSpace s(generators::octahedron()); return s; }

// K_{2,3} with parts {0,1} and {2,3,4}.
Graph k23() { return from_edge_list(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

// Triangle condition for one triple: u far away, v and w adjacent.
bool tc_violated(const DistanceMatrix& d, const Graph& g, Vertex u, Vertex v, Vertex w) {
  if (!g.adjacent(v, w) || d(u, v) != d(u, w) || d(u, v) < 2) return false;
  for (Vertex x : g.neighbors(v))
    if (g.adjacent(x, w) && d(u, x) == d(u, v) - 1) return false;
  return true;
}

} // namespace

TEST_CASE("triangle condition") {
  CHECK(satisfies_tc(k4()).holds);
  CHECK(satisfies_tc(oct()).holds);
  // C6 is bipartite: no edge has both ends equidistant from a third vertex.
  CHECK(satisfies_tc(c6()).holds);
  const auto r = satisfies_tc(c5());
  CHECK_FALSE(r.holds);
  CHECK(r.violated == GraphClass::TriangleCondition);
  CHECK(r.witness == Witness{0, 2, 3});
  CHECK(tc_violated(c5().distances(), c5().graph(), 0, 2, 3));
}

TEST_CASE("quadrangle condition") {
  CHECK(satisfies_qc(c4()).holds);
  CHECK(satisfies_qc(k4()).holds);
  const auto r = satisfies_qc(c6());
  CHECK_FALSE(r.holds);
  CHECK(r.witness == Witness{0, 2, 4, 3});
}

TEST_CASE("weakly modular, meshed and pseudo-modular") {
  CHECK(is_weakly_modular(GeodesicSpace(generators::complete(5))).holds);
  CHECK(is_weakly_modular(c4()).holds);
  const auto wm = is_weakly_modular(c5());
  CHECK_FALSE(wm.holds);
  CHECK(wm.violated == GraphClass::TriangleCondition);

  CHECK(is_meshed(oct()).holds);
  CHECK(is_meshed(k4()).holds);
  CHECK_FALSE(is_meshed(c6()).holds);

  CHECK(is_pseudo_modular_metric(c4()).holds);
  CHECK(is_pseudo_modular_metric(k4()).holds);
  CHECK_FALSE(is_pseudo_modular_metric(c5()).holds);

  CHECK(is_pseudo_modular_3helly(GeodesicSpace(generators::complete(5))).holds);
  CHECK(is_pseudo_modular_3helly(c4()).holds);
  const auto helly = is_pseudo_modular_3helly(c5());
  CHECK_FALSE(helly.holds);
  REQUIRE(helly.witness.size() == 6);
  // The three reported balls meet pairwise but have no common vertex.
  const auto b1 = c5().ball(helly.witness[0], helly.witness[1]);
  const auto b2 = c5().ball(helly.witness[2], helly.witness[3]);
  const auto b3 = c5().ball(helly.witness[4], helly.witness[5]);
  CHECK(b1.intersects(b2));
  CHECK(b2.intersects(b3));
  CHECK(b1.intersects(b3));
  CHECK((b1 & b2 & b3).empty());
  // C4's unit balls around 0, 1, 2 share vertex 1.
  CHECK((c4().ball(0, 1) & c4().ball(1, 1) & c4().ball(2, 1)).contains(1));
}

TEST_CASE("bridged and weakly bridged") {
  CHECK(is_bridged(k4()).holds);
  const auto c4_bridged = is_bridged(c4());
  CHECK_FALSE(c4_bridged.holds);
  CHECK(c4_bridged.violated == GraphClass::NoInducedC4);
  CHECK(c4_bridged.witness == Witness{0, 1, 2, 3});
  for (const auto& named : chordal_samples()) {
    INFO(named.name);
    CHECK(is_bridged(GeodesicSpace(named.graph)).holds);
  }
  CHECK_FALSE(is_weakly_bridged(c4()).holds);
  CHECK(is_weakly_bridged(k4()).holds);
  CHECK_FALSE(is_weakly_bridged(c5()).holds);
}

TEST_CASE("convex balls") {
  CHECK(has_convex_balls(GeodesicSpace(generators::complete(5))).holds);
  const auto r = has_convex_balls(c4());
  CHECK_FALSE(r.holds);
  CHECK(r.witness == Witness{0, 1});
  CHECK_FALSE(has_convex_balls(c6()).holds);
}

TEST_CASE("simple descent") {
  for (int k = 1; k <= 4; ++k) CHECK(satisfies_k_sd(k4(), k).holds);
  CHECK(satisfies_k_sd(oct(), 3).holds);
  CHECK(satisfies_k_sd(c6(), 2).holds);
  CHECK_FALSE(satisfies_k_sd(c5(), 2).holds);
  CHECK_THROWS_AS(satisfies_k_sd(c4(), 0), Error);
}

TEST_CASE("squares") {
  CHECK(squares(c4().graph()) == std::vector<Square>{{0, 1, 2, 3}});
  CHECK(squares(k4().graph()).empty());
  CHECK(squares(oct().graph()) == std::vector<Square>{{0, 1, 3, 4}, {0, 2, 3, 5}, {1, 2, 4, 5}});
  CHECK(squares(generators::hypercube(3)).size() == 6);
}

TEST_CASE("interval and positioning conditions") {
  const auto ic = satisfies_ic(c5());
  CHECK_FALSE(ic.holds);
  CHECK(ic.witness == Witness{0, 2});
  CHECK(satisfies_ic(c4()).holds);
  CHECK(satisfies_ic(oct()).holds);

  CHECK(satisfies_pc(c5()).holds);
  CHECK(satisfies_pc(oct()).holds);
  CHECK(satisfies_pc(GeodesicSpace(generators::hypercube(3))).holds);
  const GeodesicSpace k23s(k23());
  const auto pc = satisfies_pc(k23s);
  CHECK_FALSE(pc.holds);
  CHECK(pc.witness == Witness{0, 2, 1, 3, 4});

  CHECK(is_matroid_basis_graph_candidate(oct()).holds);
  CHECK(is_matroid_basis_graph_candidate(c4()).holds);
  CHECK_FALSE(is_matroid_basis_graph_candidate(c5()).holds);
}

TEST_CASE("classify and certify on C4") {
  const auto reports = classify(c4());
  REQUIRE(reports.size() == 15);
  auto find = [&](GraphClass c) {
    return *std::find_if(reports.begin(), reports.end(), [&](const auto& r) { return r.graph_class == c; });
  };
  CHECK_FALSE(find(GraphClass::WeaklyBridged).holds);
  CHECK(find(GraphClass::PseudoModular).holds);
  CHECK(find(GraphClass::IntervalCondition).holds);
  CHECK(find(GraphClass::PositioningCondition).holds);
  for (const auto& r : reports) CHECK(r.holds == r.witness.empty());
  const auto cert = certify(c4());
  CHECK_FALSE(cert.weakly_bridged);
  CHECK(cert.pseudo_modular);
  CHECK(cert.matroid_basis);
  CHECK_FALSE(certify(c5()).any());
  CHECK(to_string(GraphClass::WeaklyBridged) == "weakly_bridged");
}

TEST_CASE("class relations on small connected graphs") {
  for (const auto& g : connected_graphs(5)) {
    const GeodesicSpace s(g);
    const auto wm = is_weakly_modular(s).holds;
    const auto pm = is_pseudo_modular_metric(s).holds;
    const auto wb = is_weakly_bridged(s).holds;
    const auto tc = satisfies_tc(s).holds;
    CHECK(pm == is_pseudo_modular_3helly(s).holds);
    CHECK(wb == (wm && has_convex_balls(s).holds));
    CHECK(tc == satisfies_k_sd(s, 2).holds);
    CHECK(satisfies_k_sd(s, 1).holds);
    if (is_bridged(s).holds) CHECK(wb);
    if (pm) CHECK(wm);
    if (wb) CHECK(satisfies_k_sd(s, static_cast<int>(g.order())).holds);
    if (is_matroid_basis_graph_candidate(s).holds) CHECK(is_meshed(s).holds);
    if (wm) CHECK(is_meshed(s).holds);

    const auto r = satisfies_tc(s);
    if (!r.holds) CHECK(tc_violated(s.distances(), g, r.witness[0], r.witness[1], r.witness[2]));
  }
}

TEST_CASE("basis graphs are meshed candidates") {
  for (const auto& m : {uniform_matroid(2, 4), uniform_matroid(2, 5), uniform_matroid(3, 5),
                        graphic_matroid(generators::complete(4))}) {
    const GeodesicSpace s(basis_graph(m));
    CHECK(is_matroid_basis_graph_candidate(s).holds);
    CHECK(is_meshed(s).holds);
  }
}
