// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "geoconv/classes.hpp"
#include "geoconv/convexity.hpp"
#include "geoconv/enumeration.hpp"
#include "geoconv/io.hpp"
#include "geoconv/matroid.hpp"
#include "geoconv/separation.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace geoconv;
using namespace geoconv::testing;

namespace {

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> samples;

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (ok) return;
    ++failures;
    if (samples.size() < 5) samples.push_back(describe());
  }
};

std::string show(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Vertex v) {
    out += (first ? "" : ",") + std::to_string(v);
    first = false;
  });
  return out + "}";
}

// "n:u-v,u-v,..." on one line.
std::string describe(const Graph& g) {
  std::string out = std::to_string(g.order()) + ":";
  for (const auto& e : g.edges()) out += (out.back() == ':' ? "" : ",") + std::to_string(e.u) + "-" + std::to_string(e.v);
  return out;
}

std::vector<VertexSet> small_subsets(std::size_t n, int max_size) {
  std::vector<VertexSet> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m)
    if (std::popcount(m) <= max_size) out.push_back(from_mask(n, m));
  return out;
}

// Criteria 1, 2 and the pipeline propositions of 5 share one pass.
struct SeparationRun {
  Tally oracle;       // criterion 1
  Tally bijection;    // criterion 2
  Tally equidistance; // residue vertices vs. A-B edges
  Tally nonempty_s;   // S sets under the triangle condition
  Tally connected;    // both sides of each H
  std::size_t graphs = 0;
  std::size_t instances = 0;
  std::size_t pairs = 0;
  double seconds = 0;
};

// Corpus graphs must be in class; exhaustively generated ones are filtered.
void run_instance_graph(const std::string& name, const Graph& g, SeparationRun& run, bool must_certify) {
  const GeodesicSpace space(g);
  const auto cert = certify(space);
  if (must_certify) run.oracle.expect(cert.any(), [&] { return name + " is outside the certified classes"; });
  if (!cert.any()) return;
  ++run.graphs;
  const bool tc = satisfies_tc(space).holds;
  const auto oracle = enumerate_bruteforce(space);
  const auto subsets = small_subsets(g.order(), 2);
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen_pairs;

  for (const auto& a : subsets) {
    for (const auto& b : subsets) {
      if (a.intersects(b)) continue;
      ++run.instances;
      const auto out = halfspace_separation(space, a, b, {true});
      const bool expected = count_separating(oracle, a, b) > 0;
      run.oracle.expect(out.answer != Answer::Unknown && (out.answer == Answer::Yes) == expected, [&] {
        return name + " A=" + show(a) + " B=" + show(b) + " answer=" + std::string(to_string(out.answer));
      });
      if (out.halfspace) {
        const auto& h = *out.halfspace;
        run.connected.expect(induces_connected(g, h) && induces_connected(g, h.complement()),
                             [&] { return name + " H=" + show(h); });
      }

      // Rebuild every branch's pair to check the per-pair statements once.
      for (std::size_t i = 0; i + 1 < out.path.size(); ++i) {
        auto a0 = a, b0 = b;
        a0.insert(out.path[i]);
        b0.insert(out.path[i + 1]);
        const auto closure = shadow_closure(space, a0, b0);
        if (closure.overlapping()) continue;
        if (!seen_pairs.emplace(to_mask(closure.a), to_mask(closure.b)).second) continue;
        ++run.pairs;
        const auto pair = ShadowClosedPair::make(space, closure.a, closure.b);
        pair.residue().for_each([&](Vertex x) {
          for (const auto& e : pair.ab_edges()) {
            run.equidistance.expect(space.distance(x, e.u) == space.distance(x, e.v), [&] {
              return name + " x=" + std::to_string(x) + " edge " + std::to_string(e.u) + "-" + std::to_string(e.v);
            });
            if (tc)
              run.nonempty_s.expect(!s_set(space, pair, x, e.u, e.v).empty(), [&] {
                return name + " x=" + std::to_string(x) + " edge " + std::to_string(e.u) + "-" + std::to_string(e.v);
              });
          }
        });
        if (pair.residue().count() > 20) continue;
        const auto pf = build_formula_lenient(space, pair);
        const auto models = twosat::count_models_bruteforce(pf.formula);
        const auto halfspaces = count_separating(oracle, pair.a(), pair.b());
        run.bijection.expect(models == halfspaces, [&] {
          return name + " A*=" + show(pair.a()) + " B*=" + show(pair.b()) + " models=" + std::to_string(models) +
                 " halfspaces=" + std::to_string(halfspaces);
        });
      }
    }
  }
}

bool report(int id, const std::string& title, const Tally& t, const std::string& detail, bool within_time = true) {
  const bool pass = t.failures == 0 && t.checks > 0 && within_time;
  std::printf("%s criterion %d: %s (%zu checks, %zu violations%s%s)\n", pass ? "PASS" : "FAIL", id, title.c_str(),
              t.checks, t.failures, detail.empty() ? "" : ", ", detail.c_str());
  for (const auto& s : t.samples) std::printf("    violation: %s\n", s.c_str());
  if (!within_time) std::printf("    time budget exceeded\n");
  std::fflush(stdout);
  return pass;
}

Tally merge(std::initializer_list<const Tally*> parts) {
  Tally all;
  for (const auto* t : parts) {
    all.checks += t->checks;
    all.failures += t->failures;
    all.samples.insert(all.samples.end(), t->samples.begin(), t->samples.end());
  }
  return all;
}

double since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

} // namespace

int main() {
  bool all = true;
  const auto small = connected_graphs(7);
  const auto corpus = curated_corpus();

  // 1 + 2 (+ pipeline propositions for 5)
  SeparationRun sep;
  {
    const auto start = std::chrono::steady_clock::now();
    for (const auto& g : small)
      if (g.order() <= 5) run_instance_graph(describe(g), g, sep, false);
    for (const auto& named : corpus) run_instance_graph(named.name, named.graph, sep, true);
    sep.seconds = since(start);
  }
  all &= report(1, "separation matches brute force on in-class graphs", sep.oracle,
                std::to_string(sep.graphs) + " graphs, " + std::to_string(sep.instances) + " instances, " +
                    seconds(sep.seconds),
                sep.seconds < 300);
  all &= report(2, "model count equals separating halfspace count per shadow-closed pair", sep.bijection,
                std::to_string(sep.pairs) + " distinct pairs");

  // 3
  {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    for (const auto& named : corpus) {
      const GeodesicSpace space(named.graph);
      if (space.order() > 12) continue;
      const auto flash = enumerate_flashlight(space);
      const auto brute = enumerate_bruteforce(space);
      t.expect(flash.complete() && flash.list.halfspaces == brute.halfspaces, [&] {
        return named.name + ": flashlight " + std::to_string(flash.list.halfspaces.size()) + " vs " +
               std::to_string(brute.halfspaces.size());
      });
    }
    const std::pair<const char*, Graph> named_counts[] = {{"K3", generators::complete(3)},
                                                          {"C4", generators::cycle(4)},
                                                          {"P3", generators::path(3)},
                                                          {"octahedron", generators::octahedron()}};
    const std::size_t expected[] = {8, 6, 6, 10};
    for (std::size_t i = 0; i < 4; ++i) {
      const auto got = enumerate_flashlight(GeodesicSpace(named_counts[i].second)).list.halfspaces.size();
      t.expect(got == expected[i], [&] {
        return std::string(named_counts[i].first) + ": " + std::to_string(got) + " halfspaces";
      });
    }
    const auto secs = since(start);
    all &= report(3, "flashlight enumeration equals brute force", t, seconds(secs), secs < 60);
  }

  // 4
  {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    std::size_t graphs = 0;
    for (const auto& g : small) {
      if (g.order() > 6) continue;
      ++graphs;
      const GeodesicSpace s(g);
      const auto name = describe(g);
      t.expect(is_pseudo_modular_metric(s).holds == is_pseudo_modular_3helly(s).holds,
               [&] { return "pseudo-modular forms disagree on " + name; });
      t.expect(is_weakly_bridged(s).holds == (is_weakly_modular(s).holds && has_convex_balls(s).holds),
               [&] { return "weakly bridged forms disagree on " + name; });
      t.expect(satisfies_k_sd(s, 2).holds == satisfies_tc(s).holds,
               [&] { return "2-SD and TC disagree on " + name; });
    }
    const auto secs = since(start);
    all &= report(4, "class checker cross-validation", t, std::to_string(graphs) + " graphs, " + seconds(secs),
                  secs < 600);
  }

  // 5
  {
    Tally local, balls;
    std::size_t meshed = 0, bridged = 0;
    std::vector<Graph> graphs = small;
    for (const auto& named : corpus)
      if (named.graph.order() <= 7) graphs.push_back(named.graph);
    for (const auto& g : graphs) {
      const GeodesicSpace s(g);
      const auto n = g.order();
      const bool is_m = is_meshed(s).holds, is_b = is_bridged(s).holds;
      meshed += is_m;
      bridged += is_b;
      if (!is_m && !is_b) continue;
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        const auto x = from_mask(n, m);
        const bool convex = is_convex(s, x);
        if (is_m && induces_connected(g, x))
          local.expect(convex == is_locally_convex(s, x), [&] { return describe(g) + " S=" + show(x); });
        if (is_b && convex)
          for (int k = 0; k <= s.diameter(); ++k)
            balls.expect(is_convex(s, s.ball_of_set(x, k)),
                         [&] { return describe(g) + " S=" + show(x) + " k=" + std::to_string(k); });
      }
    }
    // The chordal samples exceed 7 vertices; their balls are checked too.
    for (const auto& named : chordal_samples()) {
      const GeodesicSpace s(named.graph);
      if (!is_bridged(s).holds || named.graph.order() <= 7) continue;
      ++bridged;
      const auto n = named.graph.order();
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        const auto x = from_mask(n, m);
        if (!is_convex(s, x)) continue;
        for (int k = 0; k <= s.diameter(); ++k)
          balls.expect(is_convex(s, s.ball_of_set(x, k)), [&] { return named.name + " S=" + show(x); });
      }
    }
    const auto t = merge({&sep.equidistance, &sep.nonempty_s, &sep.connected, &local, &balls});
    all &= report(5, "structural propositions hold", t,
                  "equidistance " + std::to_string(sep.equidistance.checks) + ", nonempty S " +
                      std::to_string(sep.nonempty_s.checks) + ", connected sides " +
                      std::to_string(sep.connected.checks) + ", local convexity " + std::to_string(local.checks) +
                      " on " + std::to_string(meshed) + " meshed graphs, convex balls " +
                      std::to_string(balls.checks) + " on " + std::to_string(bridged) + " bridged graphs");
  }

  // 6
  {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    const auto u24 = uniform_matroid(2, 4);
    const auto bg = basis_graph(u24);
    bool regular = true;
    for (Vertex v = 0; v < static_cast<Vertex>(bg.order()); ++v) regular = regular && bg.degree(v) == 4;
    t.expect(bg.order() == 6 && bg.size() == 12 && regular, [&] { return "U(2,4) basis graph shape"; });
    const GeodesicSpace s(bg);
    t.expect(satisfies_ic(s).holds, [] { return "U(2,4) basis graph fails IC"; });
    t.expect(satisfies_pc(s).holds, [] { return "U(2,4) basis graph fails PC"; });
    t.expect(is_meshed(s).holds, [] { return "U(2,4) basis graph not meshed"; });
    // Cayley: n^(n-2) spanning trees of K_n.
    const auto trees = graphic_matroid(generators::complete(4)).bases().size();
    t.expect(trees == 16, [&] { return "graphic K4 has " + std::to_string(trees) + " bases"; });
    const std::vector<Basis> bad{{0, 1}, {2, 3}};
    const auto w = find_exchange_violation(bad);
    t.expect(w && w->a == Basis{0, 1} && w->b == Basis{2, 3} && w->element == 0,
             [] { return "exchange counterexample not rejected with the expected witness"; });
    const auto secs = since(start);
    all &= report(6, "matroid pipeline", t, seconds(secs), secs < 10);
  }

  // 7
  {
    Tally t;
    std::mt19937_64 rng(20240601);
    std::size_t yes = 0;
    for (int round = 0; round < 200; ++round) {
      const auto n = 2 + rng() % 9;
      const auto g = random_connected(rng, n, std::uniform_real_distribution<double>(0.05, 0.6)(rng));
      const GeodesicSpace s(g);
      VertexSet a(n), b(n);
      for (std::size_t v = 0; v < n; ++v) {
        const auto roll = rng() % 4;
        if (roll == 0) a.insert(static_cast<Vertex>(v));
        if (roll == 1) b.insert(static_cast<Vertex>(v));
      }
      const auto out = halfspace_separation(s, a, b);
      if (out.answer != Answer::Yes) continue;
      ++yes;
      const bool ok = out.halfspace && is_halfspace(s, *out.halfspace) && a.is_subset_of(*out.halfspace) &&
                      !b.intersects(*out.halfspace);
      t.expect(ok, [&] { return describe(g) + " A=" + show(a) + " B=" + show(b); });
    }
    all &= report(7, "every YES answer is a verified separating halfspace", t,
                  "200 random graphs, " + std::to_string(yes) + " YES answers");
  }

  return all ? 0 : 1;
}
