#include "geoconv/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "geoconv/error.hpp"

namespace geoconv {

namespace {

using Mask = std::uint64_t;

Mask to_mask(const Basis& b) {
  Mask m = 0;
  for (auto e : b) m |= Mask{1} << e;
  return m;
}

std::string describe(const Basis& b) {
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + "}";
}

} // namespace

std::optional<ExchangeWitness> find_exchange_violation(std::span<const Basis> bases) {
  std::vector<Mask> masks;
  masks.reserve(bases.size());
  for (const auto& b : bases) {
    if (std::any_of(b.begin(), b.end(), [](auto e) { return e < 0 || e >= 64; }))
      throw Error(ErrorKind::InvalidArgument, "basis element out of range");
    masks.push_back(to_mask(b));
  }
  const std::unordered_set<Mask> present(masks.begin(), masks.end());

  for (std::size_t ia = 0; ia < masks.size(); ++ia) {
    for (std::size_t ib = 0; ib < masks.size(); ++ib) {
      const Mask only_a = masks[ia] & ~masks[ib];
      const Mask only_b = masks[ib] & ~masks[ia];
      for (Mask rest = only_a; rest != 0; rest &= rest - 1) {
        const Mask i = rest & -rest;
        bool exchanged = false;
        for (Mask cand = only_b; cand != 0 && !exchanged; cand &= cand - 1)
          exchanged = present.contains((masks[ia] & ~i) | (cand & -cand));
        if (!exchanged)
          return ExchangeWitness{bases[ia], bases[ib], static_cast<std::int32_t>(std::countr_zero(i))};
      }
    }
  }
  return std::nullopt;
}

Matroid Matroid::from_bases(std::size_t ground_size, std::size_t rank, std::vector<Basis> bases,
                            const MatroidLimits& limits) {
  if (ground_size == 0 || ground_size > 64)
    throw Error(ErrorKind::InvalidArgument, "ground set size must be in 1..64");
  if (ground_size > limits.max_ground_size)
    throw Error(ErrorKind::TooLarge, "ground set size " + std::to_string(ground_size) +
                                         " exceeds limit " + std::to_string(limits.max_ground_size));
  if (rank < 1 || rank > ground_size)
    throw Error(ErrorKind::InvalidArgument, "rank must be in 1..ground set size");
  if (bases.empty()) throw Error(ErrorKind::InvalidArgument, "a matroid needs at least one basis");
  if (bases.size() > limits.max_bases)
    throw Error(ErrorKind::TooLarge, "basis count " + std::to_string(bases.size()) +
                                         " exceeds limit " + std::to_string(limits.max_bases));
  for (auto& b : bases) {
    std::sort(b.begin(), b.end());
    if (b.size() != rank)
      throw Error(ErrorKind::InvalidArgument,
                  "basis " + describe(b) + " does not have " + std::to_string(rank) + " elements");
    if (std::adjacent_find(b.begin(), b.end()) != b.end())
      throw Error(ErrorKind::InvalidArgument, "basis " + describe(b) + " repeats an element");
    if (!b.empty() && (b.front() < 0 || static_cast<std::size_t>(b.back()) >= ground_size))
      throw Error(ErrorKind::InvalidArgument, "basis " + describe(b) + " leaves the ground set");
  }
  std::sort(bases.begin(), bases.end());
  if (auto dup = std::adjacent_find(bases.begin(), bases.end()); dup != bases.end())
    throw Error(ErrorKind::InvalidArgument, "duplicate basis " + describe(*dup));
  if (auto w = find_exchange_violation(bases))
    throw Error(ErrorKind::ExchangeViolation,
                "exchange property fails for A=" + describe(w->a) + " B=" + describe(w->b) +
                    " i=" + std::to_string(w->element));

  Matroid m;
  m.ground_size_ = ground_size;
  m.rank_ = rank;
  m.bases_ = std::move(bases);
  return m;
}

Graph basis_graph(const Matroid& m) {
  const auto& bases = m.bases();
  std::vector<Mask> masks;
  masks.reserve(bases.size());
  for (const auto& b : bases) masks.push_back(to_mask(b));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if (std::popcount(masks[i] & ~masks[j]) == 1)
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  auto g = Graph::from_edges(bases.size(), edges);
  if (!is_connected(g))
    throw Error(ErrorKind::NotConnected, "basis graph is disconnected; not a matroid");
  return g;
}

Matroid uniform_matroid(std::size_t rank, std::size_t ground_size, const MatroidLimits& limits) {
  if (rank < 1 || rank > ground_size)
    throw Error(ErrorKind::InvalidArgument, "uniform matroid needs 1 <= rank <= ground size");
  if (ground_size > limits.max_ground_size)
    throw Error(ErrorKind::TooLarge, "ground set size exceeds limit");
  std::vector<Basis> bases;
  Basis pick(rank);
  std::iota(pick.begin(), pick.end(), 0);
  const auto n = static_cast<std::int32_t>(ground_size);
  const auto r = static_cast<std::int32_t>(rank);
  while (true) {
    bases.push_back(pick);
    if (bases.size() > limits.max_bases) throw Error(ErrorKind::TooLarge, "too many bases");
    std::int32_t i = r;
    while (i > 0 && pick[static_cast<std::size_t>(i - 1)] == n - r + i - 1) --i;
    if (i == 0) break;
    ++pick[static_cast<std::size_t>(i - 1)];
    for (std::int32_t j = i; j < r; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return Matroid::from_bases(ground_size, rank, std::move(bases), limits);
}

Matroid graphic_matroid(const Graph& g, const MatroidLimits& limits) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "graphic matroid needs a connected graph");
  const auto& edges = g.edges();
  if (edges.size() > limits.max_ground_size)
    throw Error(ErrorKind::TooLarge, "graph has " + std::to_string(edges.size()) +
                                         " edges, limit is " + std::to_string(limits.max_ground_size));
  const std::size_t rank = g.order() - 1;
  if (rank == 0) throw Error(ErrorKind::InvalidArgument, "graphic matroid of a single vertex has rank 0");

  std::vector<Basis> bases;
  Basis chosen;
  // Union-find copied per level; the graphs here are tiny.
  auto find = [](std::vector<Vertex>& parent, Vertex x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  auto grow = [&](auto&& self, std::size_t next, std::vector<Vertex> parent) -> void {
    if (chosen.size() == rank) {
      bases.push_back(chosen);
      if (bases.size() > limits.max_bases) throw Error(ErrorKind::TooLarge, "too many spanning trees");
      return;
    }
    if (edges.size() - next < rank - chosen.size()) return;
    for (std::size_t e = next; e < edges.size(); ++e) {
      const Vertex ru = find(parent, edges[e].u);
      const Vertex rv = find(parent, edges[e].v);
      if (ru == rv) continue;
      auto merged = parent;
      merged[static_cast<std::size_t>(ru)] = rv;
      chosen.push_back(static_cast<std::int32_t>(e));
      self(self, e + 1, std::move(merged));
      chosen.pop_back();
    }
  };
  std::vector<Vertex> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  grow(grow, 0, parent);
  return Matroid::from_bases(edges.size(), rank, std::move(bases), limits);
}

} // namespace geoconv
