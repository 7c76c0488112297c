#include <doctest.h>

#include <random>

#include "geoconv/error.hpp"
#include "geoconv/graph.hpp"
#include "geoconv/io.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace geoconv;
using geoconv::testing::from_edge_list;

namespace {

VertexSet set(std::size_t n, std::initializer_list<Vertex> vs) { return VertexSet::of(n, vs); }

template <typename F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected geoconv::Error");
  return ErrorKind::InvalidArgument;
}

} // namespace

TEST_CASE("graph construction rejects loops and parallel edges") {
  CHECK(error_kind([] { from_edge_list(3, {{0, 1}, {1, 1}}); }) == ErrorKind::SelfLoop);
  CHECK(error_kind([] { from_edge_list(3, {{0, 1}, {1, 0}}); }) == ErrorKind::DuplicateEdge);
  CHECK(error_kind([] { from_edge_list(3, {{0, 3}}); }) == ErrorKind::InvalidArgument);
  const auto g = from_edge_list(3, {{2, 1}, {0, 1}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  for (Vertex v = 0; v < 3; ++v)
    for (Vertex w : g.neighbors(v)) CHECK(g.adjacent(w, v));
}

TEST_CASE("all_pairs_distances") {
  SUBCASE("P3") { CHECK(all_pairs_distances(generators::path(3))(0, 2) == 2); }
  SUBCASE("K3") {
    const auto d = all_pairs_distances(generators::complete(3));
    for (Vertex u = 0; u < 3; ++u)
      for (Vertex v = 0; v < 3; ++v) CHECK(d(u, v) == (u == v ? 0 : 1));
  }
  SUBCASE("octahedron") {
    const auto d = all_pairs_distances(generators::octahedron());
    CHECK(d(0, 3) == 2);
    CHECK(d(0, 1) == 1);
    CHECK(d(1, 4) == 2);
    CHECK(d(2, 5) == 2);
  }
  SUBCASE("disconnected input is rejected") {
    CHECK(error_kind([] { all_pairs_distances(from_edge_list(4, {{0, 1}, {2, 3}})); }) ==
          ErrorKind::NotConnected);
    CHECK(error_kind([] { GeodesicSpace(from_edge_list(3, {{0, 1}})); }) == ErrorKind::NotConnected);
  }
}

TEST_CASE("distances agree with Floyd-Warshall and satisfy metric axioms") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 60; ++round) {
    const auto g = geoconv::testing::random_connected(rng, 2 + rng() % 12, 0.2);
    const auto d = all_pairs_distances(g);
    const auto fw = geoconv::testing::floyd_warshall(g);
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        CHECK(d(u, v) == fw[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
        CHECK(d(u, v) == d(v, u));
        CHECK((d(u, v) == 1) == g.adjacent(u, v));
        for (Vertex w = 0; w < n; ++w) CHECK(d(u, w) <= d(u, v) + d(v, w));
      }
    }
  }
}

TEST_CASE("intervals") {
  const GeodesicSpace c4(generators::cycle(4));
  CHECK(c4.interval(0, 2) == set(4, {0, 1, 2, 3}));
  CHECK(c4.interval(1, 1) == set(4, {1}));
  const GeodesicSpace p3(generators::path(3));
  CHECK(p3.interval(0, 2) == set(3, {0, 1, 2}));
  CHECK(p3.interval(2, 0) == p3.interval(0, 2));
}

TEST_CASE("interval properties on random graphs") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 40; ++round) {
    const GeodesicSpace s(geoconv::testing::random_connected(rng, 2 + rng() % 10, 0.25));
    const auto n = static_cast<Vertex>(s.order());
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        const auto& iv = s.interval(u, v);
        CHECK(iv.contains(u));
        CHECK(iv.contains(v));
        CHECK(iv == s.interval(v, u));
        iv.for_each([&](Vertex x) { CHECK(s.interval(u, x).is_subset_of(iv)); });
      }
    }
  }
}

TEST_CASE("balls and spheres") {
  const GeodesicSpace c4(generators::cycle(4));
  CHECK(c4.ball(2, 0) == set(4, {2}));
  CHECK(c4.ball(0, 1) == set(4, {0, 1, 3}));
  const GeodesicSpace oct(generators::octahedron());
  CHECK(oct.ball(0, 1) == set(6, {0, 1, 2, 4, 5}));
  CHECK(oct.sphere(0, 2) == set(6, {3}));
  const GeodesicSpace p3(generators::path(3));
  CHECK(p3.sphere(0, 2) == set(3, {2}));
  CHECK(p3.sphere(1, 0) == set(3, {1}));
  const GeodesicSpace k4(generators::complete(4));
  CHECK(k4.sphere(0, 1) == set(4, {1, 2, 3}));

  SUBCASE("ball is the disjoint union of spheres") {
    const GeodesicSpace s(generators::hypercube(3));
    for (Vertex v = 0; v < 8; ++v) {
      for (int k = 0; k <= 3; ++k) {
        VertexSet acc(8);
        for (int j = 0; j <= k; ++j) {
          CHECK_FALSE(acc.intersects(s.sphere(v, j)));
          acc |= s.sphere(v, j);
        }
        CHECK(acc == s.ball(v, k));
      }
    }
  }
}

TEST_CASE("ball_of_set") {
  const GeodesicSpace p5(generators::path(5));
  CHECK(p5.ball_of_set(set(5, {0, 4}), 1) == set(5, {0, 1, 3, 4}));
  CHECK(p5.ball_of_set(set(5, {2}), 1) == p5.ball(2, 1));
  CHECK(p5.ball_of_set(p5.all_vertices(), 0) == p5.all_vertices());
  CHECK(error_kind([&] { p5.ball_of_set(p5.no_vertices(), 1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("shortest_connecting_path") {
  const GeodesicSpace c4(generators::cycle(4));
  CHECK(c4.shortest_connecting_path(set(4, {0}), set(4, {1})) == std::vector<Vertex>{0, 1});
  CHECK(c4.shortest_connecting_path(set(4, {0}), set(4, {2})) == std::vector<Vertex>{0, 1, 2});
  const GeodesicSpace p3(generators::path(3));
  CHECK(p3.shortest_connecting_path(set(3, {0}), set(3, {2})) == std::vector<Vertex>{0, 1, 2});
  CHECK(error_kind([&] { c4.shortest_connecting_path(set(4, {}), set(4, {2})); }) == ErrorKind::InvalidArgument);
  CHECK(error_kind([&] { c4.shortest_connecting_path(set(4, {1}), set(4, {1})); }) == ErrorKind::InvalidArgument);

  SUBCASE("length equals the set distance on random instances") {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 100; ++round) {
      const GeodesicSpace s(geoconv::testing::random_connected(rng, 3 + rng() % 10, 0.15));
      const auto n = s.order();
      VertexSet a(n), b(n);
      for (std::size_t v = 0; v < n; ++v) {
        const auto roll = rng() % 4;
        if (roll == 0) a.insert(static_cast<Vertex>(v));
        if (roll == 1) b.insert(static_cast<Vertex>(v));
      }
      if (a.empty() || b.empty()) continue;
      const auto path = s.shortest_connecting_path(a, b);
      CHECK(a.contains(path.front()));
      CHECK(b.contains(path.back()));
      CHECK(static_cast<int>(path.size()) - 1 == s.set_distance(a, b));
      for (std::size_t i = 0; i + 1 < path.size(); ++i) CHECK(s.graph().adjacent(path[i], path[i + 1]));
    }
  }
}

TEST_CASE("induced subgraphs, cycles and cliques") {
  const auto c4 = generators::cycle(4);
  const auto single = induced_subgraph(c4, set(4, {2}));
  CHECK(single.order() == 1);
  CHECK(single.edges.empty());
  const auto p = induced_subgraph(c4, set(4, {0, 1, 2}));
  CHECK(p.edges.size() == 2);
  CHECK(p.degrees() == std::vector<std::size_t>{1, 2, 1});
  const auto tri = induced_subgraph(generators::octahedron(), set(6, {0, 1, 2}));
  CHECK(tri.edges.size() == 3);
  CHECK(error_kind([&] { induced_subgraph(c4, VertexSet(4)); }) == ErrorKind::InvalidArgument);

  CHECK(has_induced_cycle(c4, 4));
  CHECK_FALSE(has_induced_cycle(generators::complete(4), 4));
  CHECK(has_induced_cycle(generators::cycle(5), 5));
  CHECK_FALSE(has_induced_cycle(generators::cycle(5), 4));
  CHECK(find_induced_cycle(generators::hypercube(3), 4) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(error_kind([&] { has_induced_cycle(c4, 6); }) == ErrorKind::InvalidArgument);

  CHECK(is_clique(c4, set(4, {3})));
  CHECK(is_clique(c4, VertexSet(4)));
  CHECK(is_clique(generators::complete(3), set(3, {0, 1, 2})));
  CHECK_FALSE(is_clique(c4, set(4, {0, 1, 2})));

  CHECK(induces_connected(c4, set(4, {0, 1, 2})));
  CHECK_FALSE(induces_connected(c4, set(4, {0, 2})));
}
