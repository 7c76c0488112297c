#include "geoconv/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "geoconv/error.hpp"

namespace geoconv {

namespace {

void check_vertex(std::size_t order, Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= order)
    throw Error(ErrorKind::InvalidArgument, "vertex id " + std::to_string(v) + " out of range");
}

// BFS distances from source; -1 for unreachable.
std::vector<std::int32_t> bfs(const Graph& g, Vertex source) {
  std::vector<std::int32_t> dist(g.order(), -1);
  std::vector<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      auto& dw = dist[static_cast<std::size_t>(w)];
      if (dw < 0) {
        dw = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

} // namespace

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
  if (order == 0) throw Error(ErrorKind::InvalidArgument, "graph must have at least one vertex");
  Graph g;
  g.adjacency_.assign(order, {});
  g.neighborhood_.assign(order, VertexSet(order));
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    check_vertex(order, e.u);
    check_vertex(order, e.v);
    if (e.u == e.v)
      throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    if (g.neighborhood_[static_cast<std::size_t>(e.u)].contains(e.v))
      throw Error(ErrorKind::DuplicateEdge,
                  "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    g.neighborhood_[static_cast<std::size_t>(e.u)].insert(e.v);
    g.neighborhood_[static_cast<std::size_t>(e.v)].insert(e.u);
    g.edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  for (std::size_t v = 0; v < order; ++v) g.adjacency_[v] = g.neighborhood_[v].members();
  return g;
}

std::int32_t DistanceMatrix::eccentricity(Vertex v) const {
  const auto r = row(v);
  return *std::max_element(r.begin(), r.end());
}

std::int32_t DistanceMatrix::diameter() const {
  return data_.empty() ? 0 : *std::max_element(data_.begin(), data_.end());
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::int32_t> data(n * n);
  for (std::size_t s = 0; s < n; ++s) {
    const auto row = bfs(g, static_cast<Vertex>(s));
    for (std::size_t t = 0; t < n; ++t) {
      if (row[t] < 0)
        throw Error(ErrorKind::NotConnected, "graph is not connected: vertex " + std::to_string(t) +
                                                 " unreachable from vertex " + std::to_string(s));
      data[s * n + t] = row[t];
    }
  }
  return DistanceMatrix(n, std::move(data));
}

bool is_connected(const Graph& g) {
  const auto d = bfs(g, 0);
  return std::none_of(d.begin(), d.end(), [](auto x) { return x < 0; });
}

bool induces_connected(const Graph& g, const VertexSet& s) {
  const Vertex start = s.first();
  if (start < 0) return true;
  VertexSet seen(g.order());
  seen.insert(start);
  std::vector<Vertex> stack{start};
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (s.contains(w) && !seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen == s;
}

std::vector<std::size_t> InducedSubgraph::degrees() const {
  std::vector<std::size_t> deg(vertices.size(), 0);
  for (const auto& e : edges) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  return deg;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw Error(ErrorKind::InvalidArgument, "induced subgraph of an empty set");
  InducedSubgraph sub;
  sub.vertices = s.members();
  std::vector<Vertex> local(g.order(), -1);
  for (std::size_t i = 0; i < sub.vertices.size(); ++i)
    local[static_cast<std::size_t>(sub.vertices[i])] = static_cast<Vertex>(i);
  for (const Edge& e : g.edges())
    if (s.contains(e.u) && s.contains(e.v))
      sub.edges.push_back({local[static_cast<std::size_t>(e.u)], local[static_cast<std::size_t>(e.v)]});
  return sub;
}

std::vector<Vertex> find_induced_cycle(const Graph& g, int length) {
  if (length != 4 && length != 5)
    throw Error(ErrorKind::InvalidArgument, "induced cycle length must be 4 or 5");
  const auto n = static_cast<Vertex>(g.order());
  const auto k = static_cast<std::size_t>(length);
  if (static_cast<std::size_t>(n) < k) return {};

  // A 2-regular graph on 4 or 5 vertices is a single cycle, so counting
  // degrees inside the subset is enough.
  std::vector<Vertex> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Vertex>(i);
  while (true) {
    bool cycle = true;
    for (std::size_t i = 0; i < k && cycle; ++i) {
      int deg = 0;
      for (std::size_t j = 0; j < k; ++j)
        if (i != j && g.adjacent(pick[i], pick[j])) ++deg;
      cycle = deg == 2;
    }
    if (cycle) return pick;
    // advance to the next k-subset in lexicographic order
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - static_cast<Vertex>(k - i + 1)) --i;
    if (i == 0) return {};
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

bool has_induced_cycle(const Graph& g, int length) { return !find_induced_cycle(g, length).empty(); }

bool is_clique(const Graph& g, const VertexSet& s) {
  for (Vertex u = s.first(); u >= 0; u = s.next(u + 1)) {
    auto rest = s - g.neighborhood(u);
    rest.erase(u);
    if (!rest.empty()) return false;
  }
  return true;
}

GeodesicSpace::GeodesicSpace(Graph g) : graph_(std::move(g)) {
  const std::size_t n = graph_.order();
  if (n > max_order)
    throw Error(ErrorKind::TooLarge, "graph order " + std::to_string(n) + " exceeds " +
                                         std::to_string(max_order));
  dist_ = all_pairs_distances(graph_);
  diameter_ = dist_.diameter();
  intervals_.assign(n * (n + 1) / 2, VertexSet(n));
  for (std::size_t u = 0; u < n; ++u) {
    const auto du = dist_.row(static_cast<Vertex>(u));
    for (std::size_t v = u; v < n; ++v) {
      const auto dv = dist_.row(static_cast<Vertex>(v));
      const auto duv = du[v];
      auto& iv = intervals_[slot(static_cast<Vertex>(u), static_cast<Vertex>(v))];
      for (std::size_t x = 0; x < n; ++x)
        if (du[x] + dv[x] == duv) iv.insert(static_cast<Vertex>(x));
    }
  }
}

std::size_t GeodesicSpace::slot(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  const auto n = order();
  const auto uu = static_cast<std::size_t>(u);
  return uu * n - uu * (uu - 1) / 2 + static_cast<std::size_t>(v - u);
}

const VertexSet& GeodesicSpace::interval(Vertex u, Vertex v) const {
  check_vertex(order(), u);
  check_vertex(order(), v);
  return intervals_[slot(u, v)];
}

VertexSet GeodesicSpace::ball(Vertex v, std::int32_t radius) const {
  check_vertex(order(), v);
  VertexSet out(order());
  const auto r = dist_.row(v);
  for (std::size_t x = 0; x < r.size(); ++x)
    if (r[x] <= radius) out.insert(static_cast<Vertex>(x));
  return out;
}

VertexSet GeodesicSpace::sphere(Vertex v, std::int32_t radius) const {
  check_vertex(order(), v);
  VertexSet out(order());
  const auto r = dist_.row(v);
  for (std::size_t x = 0; x < r.size(); ++x)
    if (r[x] == radius) out.insert(static_cast<Vertex>(x));
  return out;
}

VertexSet GeodesicSpace::ball_of_set(const VertexSet& x, std::int32_t radius) const {
  if (x.empty()) throw Error(ErrorKind::InvalidArgument, "ball around an empty set");
  VertexSet out(order());
  x.for_each([&](Vertex c) { out |= ball(c, radius); });
  return out;
}

std::int32_t GeodesicSpace::set_distance(const VertexSet& a, const VertexSet& b) const {
  if (a.empty() || b.empty()) throw Error(ErrorKind::InvalidArgument, "distance to an empty set");
  std::int32_t best = std::numeric_limits<std::int32_t>::max();
  a.for_each([&](Vertex u) { b.for_each([&](Vertex v) { best = std::min(best, dist_(u, v)); }); });
  return best;
}

std::vector<Vertex> GeodesicSpace::shortest_connecting_path(const VertexSet& a,
                                                            const VertexSet& b) const {
  if (a.empty() || b.empty())
    throw Error(ErrorKind::InvalidArgument, "shortest path between empty sets");
  if (a.intersects(b)) throw Error(ErrorKind::InvalidArgument, "path endpoints must be disjoint");
  const std::size_t n = order();
  std::vector<std::int32_t> to_b(n, std::numeric_limits<std::int32_t>::max());
  for (std::size_t x = 0; x < n; ++x)
    b.for_each([&](Vertex v) { to_b[x] = std::min(to_b[x], dist_(static_cast<Vertex>(x), v)); });

  Vertex cur = -1;
  a.for_each([&](Vertex u) {
    if (cur < 0 || to_b[static_cast<std::size_t>(u)] < to_b[static_cast<std::size_t>(cur)]) cur = u;
  });
  std::vector<Vertex> path{cur};
  while (to_b[static_cast<std::size_t>(cur)] > 0) {
    for (Vertex w : graph_.neighbors(cur)) {
      if (to_b[static_cast<std::size_t>(w)] + 1 == to_b[static_cast<std::size_t>(cur)]) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

} // namespace geoconv
