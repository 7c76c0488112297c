#include "geoconv/separation.hpp"

#include <string>

#include "geoconv/convexity.hpp"
#include "geoconv/error.hpp"

namespace geoconv {

std::string_view to_string(Answer a) {
  switch (a) {
  case Answer::Yes: return "YES";
  case Answer::No: return "NO";
  case Answer::Unknown: return "UNKNOWN";
  }
  return "?";
}

std::string_view to_string(BranchStatus s) {
  switch (s) {
  case BranchStatus::Succeeded: return "succeeded";
  case BranchStatus::ClosureOverlap: return "closure-overlap";
  case BranchStatus::FormulaUnsat: return "formula-unsat";
  case BranchStatus::VerificationFailed: return "verification-failed";
  }
  return "?";
}

namespace {

void require_universe(const GeodesicSpace& space, const VertexSet& s, const char* name) {
  if (s.universe() != space.order())
    throw Error(ErrorKind::InvalidArgument, std::string(name) + " does not match the graph order");
}

std::vector<Edge> edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  std::vector<Edge> out;
  a.for_each([&](Vertex u) {
    const auto across = g.neighborhood(u) & b;
    across.for_each([&](Vertex v) { out.push_back({u, v}); });
  });
  return out;
}

} // namespace

VertexSet shadow(const GeodesicSpace& space, const VertexSet& a, const VertexSet& b) {
  require_universe(space, a, "A");
  require_universe(space, b, "B");
  if (a.empty() || b.empty()) throw Error(ErrorKind::InvalidArgument, "shadow of or against an empty set");
  // hull(b) is shared by every candidate; extending it by x gives hull(b + x)
  const VertexSet base = hull(space, b);
  VertexSet out(space.order());
  VertexSet single(space.order());
  for (Vertex x = 0; x < static_cast<Vertex>(space.order()); ++x) {
    if (a.contains(x)) {
      out.insert(x);
      continue;
    }
    single.insert(x);
    if (hull_extend(space, base, single).intersects(a)) out.insert(x);
    single.erase(x);
  }
  return out;
}

ShadowClosure shadow_closure(const GeodesicSpace& space, const VertexSet& a0, const VertexSet& b0) {
  ShadowClosure c{a0, b0, {{a0, b0}}};
  while (true) {
    VertexSet next_a = hull(space, shadow(space, c.a, c.b));
    VertexSet next_b = hull(space, shadow(space, c.b, c.a));
    if (next_a == c.a && next_b == c.b) break;
    c.a = std::move(next_a);
    c.b = std::move(next_b);
    c.trace.emplace_back(c.a, c.b);
  }
  return c;
}

ShadowClosedPair ShadowClosedPair::make(const GeodesicSpace& space, VertexSet a, VertexSet b) {
  require_universe(space, a, "A");
  require_universe(space, b, "B");
  auto reject = [](const char* why) { throw Error(ErrorKind::InvalidArgument, std::string("pair ") + why); };
  if (a.empty() || b.empty()) reject("has an empty side");
  if (a.intersects(b)) reject("sides intersect");
  if (!is_convex(space, a) || !is_convex(space, b)) reject("side is not convex");
  if (shadow(space, a, b) != a || shadow(space, b, a) != b) reject("is not shadow-closed");
  ShadowClosedPair p;
  p.ab_edges_ = edges_between(space.graph(), a, b);
  if (p.ab_edges_.empty()) reject("is not osculating");
  p.residue_ = (a | b).complement();
  p.a_ = std::move(a);
  p.b_ = std::move(b);
  return p;
}

VertexSet s_set(const GeodesicSpace& space, const ShadowClosedPair& pair, Vertex x, Vertex a, Vertex b) {
  if (!pair.residue().contains(x)) throw Error(ErrorKind::InvalidArgument, "x must be a residue vertex");
  if (!pair.a().contains(a) || !pair.b().contains(b) || !space.graph().adjacent(a, b))
    throw Error(ErrorKind::InvalidArgument, "(a,b) must be an edge from A to B");
  const auto& g = space.graph();
  return pair.residue() & g.neighborhood(a) & g.neighborhood(b) & space.interval(x, a) &
         space.interval(x, b);
}

VertexSet s_set(const GeodesicSpace& space, const ShadowClosedPair& pair, Vertex x) {
  VertexSet out(space.order());
  for (const auto& e : pair.ab_edges()) out |= s_set(space, pair, x, e.u, e.v);
  return out;
}

namespace {

// Union of I(x,z) over z in side.
VertexSet reach(const GeodesicSpace& space, Vertex x, const VertexSet& side) {
  VertexSet out(space.order());
  side.for_each([&](Vertex z) { out |= space.interval(x, z); });
  return out;
}

bool implies_via(const GeodesicSpace& space, const ShadowClosedPair& pair, Vertex x, Vertex y,
                 const VertexSet& side) {
  if (!pair.residue().contains(x) || !pair.residue().contains(y))
    throw Error(ErrorKind::InvalidArgument, "implication is defined on residue vertices");
  for (Vertex z = side.first(); z >= 0; z = side.next(z + 1))
    if (space.interval(x, z).contains(y)) return true;
  return false;
}

PairFormula build(const GeodesicSpace& space, const ShadowClosedPair& pair, bool strict) {
  const auto& residue = pair.residue();
  PairFormula pf;
  pf.var_to_vertex = residue.members();
  pf.vertex_to_var.assign(space.order(), -1);
  for (std::size_t i = 0; i < pf.var_to_vertex.size(); ++i)
    pf.vertex_to_var[static_cast<std::size_t>(pf.var_to_vertex[i])] = static_cast<std::int32_t>(i);
  pf.formula = twosat::Formula(pf.var_to_vertex.size());
  const auto& xs = pf.var_to_vertex;
  auto var = [&](Vertex v) { return pf.vertex_to_var[static_cast<std::size_t>(v)]; };

  std::vector<VertexSet> s_sets;
  s_sets.reserve(xs.size());
  for (Vertex x : xs) {
    s_sets.push_back(s_set(space, pair, x));
    if (s_sets.back().empty()) pf.empty_s_sets.push_back(x);
  }
  if (strict && !pf.empty_s_sets.empty())
    throw Error(ErrorKind::TcPrerequisite,
                "S_x is empty for residue vertex " + std::to_string(pf.empty_s_sets.front()));

  auto& f = pf.formula;
  // equality constraints
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i; j < xs.size(); ++j) {
      const auto shared = s_sets[i] & s_sets[j];
      if (shared.empty()) continue;
      const auto between = space.interval(xs[i], xs[j]) & residue;
      between.for_each([&](Vertex z) {
        shared.for_each([&](Vertex x0) {
          if (x0 != z) f.add_equality(var(x0), var(z));
        });
      });
    }
  }
  // implication constraints
  for (Vertex x : xs) {
    const auto to_a = reach(space, x, pair.a()) & residue;
    to_a.for_each([&](Vertex y) {
      if (y != x) f.add(twosat::neg(var(x)), twosat::pos(var(y)));
    });
    const auto to_b = reach(space, x, pair.b()) & residue;
    to_b.for_each([&](Vertex y) {
      if (y != x) f.add(twosat::pos(var(x)), twosat::neg(var(y)));
    });
  }
  // at least one endpoint on the side an interval crosses
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const auto& iv = space.interval(xs[i], xs[j]);
      const auto vi = static_cast<std::int32_t>(i);
      const auto vj = static_cast<std::int32_t>(j);
      if (iv.intersects(pair.b())) f.add(twosat::neg(vi), twosat::neg(vj));
      if (iv.intersects(pair.a())) f.add(twosat::pos(vi), twosat::pos(vj));
    }
  }
  return pf;
}

} // namespace

bool implies_a(const GeodesicSpace& space, const ShadowClosedPair& pair, Vertex x, Vertex y) {
  return implies_via(space, pair, x, y, pair.a());
}

bool implies_b(const GeodesicSpace& space, const ShadowClosedPair& pair, Vertex x, Vertex y) {
  return implies_via(space, pair, x, y, pair.b());
}

PairFormula build_formula(const GeodesicSpace& space, const ShadowClosedPair& pair) {
  return build(space, pair, true);
}

PairFormula build_formula_lenient(const GeodesicSpace& space, const ShadowClosedPair& pair) {
  return build(space, pair, false);
}

VertexSet halfspace_from_assignment(const ShadowClosedPair& pair, const PairFormula& pf,
                                    const twosat::Assignment& values) {
  VertexSet h = pair.a();
  for (std::size_t i = 0; i < pf.var_to_vertex.size(); ++i)
    if (values[i]) h.insert(pf.var_to_vertex[i]);
  return h;
}

namespace {

struct PairVerdict {
  Answer answer = Answer::No;
  BranchStatus status = BranchStatus::FormulaUnsat;
  std::optional<VertexSet> halfspace;
  PairFormula formula;
};

PairVerdict decide_pair(const GeodesicSpace& space, const ShadowClosedPair& pair) {
  PairVerdict v;
  v.formula = build_formula_lenient(space, pair);
  const auto model = twosat::solve(v.formula.formula);
  if (!model) return v;
  auto h = halfspace_from_assignment(pair, v.formula, *model);
  if (is_halfspace(space, h) && pair.a().is_subset_of(h) && !pair.b().intersects(h)) {
    v.answer = Answer::Yes;
    v.status = BranchStatus::Succeeded;
    v.halfspace = std::move(h);
  } else {
    v.answer = Answer::Unknown;
    v.status = BranchStatus::VerificationFailed;
  }
  return v;
}

} // namespace

SeparationOutcome separate_pair(const GeodesicSpace& space, const ShadowClosedPair& pair, bool certified) {
  auto v = decide_pair(space, pair);
  SeparationOutcome out;
  out.certified = certified;
  out.certificate_contradicted = certified && v.status == BranchStatus::VerificationFailed;
  out.answer = v.answer;
  out.halfspace = std::move(v.halfspace);
  BranchDiagnostic d;
  d.status = v.status;
  d.residue_size = pair.residue().count();
  d.clause_count = v.formula.formula.clauses().size();
  d.tc_prerequisite_failed = !v.formula.empty_s_sets.empty();
  out.diagnostics.push_back(d);
  if (out.answer == Answer::Yes) out.branch = 0;
  out.last_formula = std::move(v.formula);
  return out;
}

SeparationOutcome halfspace_separation(const GeodesicSpace& space, const VertexSet& a, const VertexSet& b,
                                       const SeparationOptions& options) {
  require_universe(space, a, "A");
  require_universe(space, b, "B");
  if (a.intersects(b)) throw Error(ErrorKind::InvalidArgument, "A and B must be disjoint");

  SeparationOutcome out;
  if (a.empty()) {
    out.answer = Answer::Yes;
    out.halfspace = space.no_vertices();
    out.base_case = "empty-a";
    return out;
  }
  if (b.empty()) {
    out.answer = Answer::Yes;
    out.halfspace = space.all_vertices();
    out.base_case = "empty-b";
    return out;
  }
  if (hull(space, a).intersects(hull(space, b))) {
    out.answer = Answer::No;
    out.base_case = "hulls-intersect";
    return out;
  }

  out.certified = options.certified ? *options.certified : certify(space).any();
  out.path = space.shortest_connecting_path(a, b);
  bool unknown = false;
  for (std::size_t i = 0; i + 1 < out.path.size(); ++i) {
    BranchDiagnostic d;
    d.index = i;
    d.edge = {out.path[i], out.path[i + 1]};
    VertexSet a0 = a;
    a0.insert(out.path[i]);
    VertexSet b0 = b;
    b0.insert(out.path[i + 1]);
    auto closure = shadow_closure(space, a0, b0);
    d.closure_rounds = closure.trace.size() - 1;
    if (closure.overlapping()) {
      d.status = BranchStatus::ClosureOverlap;
      out.diagnostics.push_back(d);
      continue;
    }
    // The fixpoint satisfies every pair invariant; make() re-checks them.
    const auto pair = ShadowClosedPair::make(space, std::move(closure.a), std::move(closure.b));
    auto verdict = decide_pair(space, pair);
    d.status = verdict.status;
    d.residue_size = pair.residue().count();
    d.clause_count = verdict.formula.formula.clauses().size();
    d.tc_prerequisite_failed = !verdict.formula.empty_s_sets.empty();
    out.diagnostics.push_back(d);
    out.last_formula = std::move(verdict.formula);
    if (verdict.answer == Answer::Yes) {
      out.answer = Answer::Yes;
      out.halfspace = std::move(verdict.halfspace);
      out.branch = i;
      return out;
    }
    unknown = unknown || verdict.answer == Answer::Unknown;
    if (out.certified && verdict.status == BranchStatus::VerificationFailed) out.certificate_contradicted = true;
  }
  out.answer = unknown ? Answer::Unknown : Answer::No;
  return out;
}

} // namespace geoconv
