#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "geoconv/classes.hpp"
#include "geoconv/graph.hpp"
#include "geoconv/twosat.hpp"

namespace geoconv {

/// Shadow of a with respect to b: vertices x with hull(b + x) meeting a.
/// Contains a. Throws Error(InvalidArgument) on empty inputs.
VertexSet shadow(const GeodesicSpace& space, const VertexSet& a, const VertexSet& b);

struct ShadowClosure {
  VertexSet a;
  VertexSet b;
  /// (A^i, B^i) for i = 0..rounds, starting with the input pair.
  std::vector<std::pair<VertexSet, VertexSet>> trace;

  bool overlapping() const { return a.intersects(b); }
};

/// Iterates A <- hull(A/B), B <- hull(B/A) (both from the previous pair)
/// until neither changes. The result may overlap; callers treat that as
/// "not separable".
ShadowClosure shadow_closure(const GeodesicSpace& space, const VertexSet& a0, const VertexSet& b0);

/// Two disjoint, convex, adjacent, shadow-closed sets and the residue
/// V \ (A u B).
class ShadowClosedPair {
public:
  /// Verifies every invariant; throws Error(InvalidArgument) naming the first
  /// that fails.
  static ShadowClosedPair make(const GeodesicSpace& space, VertexSet a, VertexSet b);

  const VertexSet& a() const noexcept { return a_; }
  const VertexSet& b() const noexcept { return b_; }
  const VertexSet& residue() const noexcept { return residue_; }
  /// Edges (a, b) with a in A and b in B, ordered by (a, b).
  const std::vector<Edge>& ab_edges() const noexcept { return ab_edges_; }

private:
  VertexSet a_;
  VertexSet b_;
  VertexSet residue_;
  std::vector<Edge> ab_edges_;
};

/// S_x^{ab}: residue vertices adjacent to a and b lying in I(x,a) and I(x,b).
VertexSet s_set(const GeodesicSpace& space, const ShadowClosedPair& pair, Vertex x, Vertex a, Vertex b);
/// S_x: union of S_x^{ab} over all A-B edges.
VertexSet s_set(const GeodesicSpace& space, const ShadowClosedPair& pair, Vertex x);

/// x A-implies y: some z in A has y in I(x,z).
bool implies_a(const GeodesicSpace& space, const ShadowClosedPair& pair, Vertex x, Vertex y);
/// x B-implies y: some z in B has y in I(x,z).
bool implies_b(const GeodesicSpace& space, const ShadowClosedPair& pair, Vertex x, Vertex y);

/// The separation formula: one variable per residue vertex (true = H side)
/// with equality, implication and at-least-one constraints.
struct PairFormula {
  twosat::Formula formula;
  std::vector<Vertex> var_to_vertex;
  /// -1 for vertices outside the residue.
  std::vector<std::int32_t> vertex_to_var;
  /// Residue vertices with empty S_x (only possible when the triangle
  /// condition fails).
  std::vector<Vertex> empty_s_sets;
};

/// Strict: throws Error(TcPrerequisite) if some S_x is empty.
PairFormula build_formula(const GeodesicSpace& space, const ShadowClosedPair& pair);
/// Same clauses, but records empty S_x instead of throwing. The formula stays
/// a necessary condition for separation on any graph.
PairFormula build_formula_lenient(const GeodesicSpace& space, const ShadowClosedPair& pair);

/// H = A plus the residue vertices whose variable is true.
VertexSet halfspace_from_assignment(const ShadowClosedPair& pair, const PairFormula& pf,
                                    const twosat::Assignment& values);

enum class Answer { Yes, No, Unknown };
std::string_view to_string(Answer a);

enum class BranchStatus {
  Succeeded,
  ClosureOverlap,
  FormulaUnsat,
  VerificationFailed,
};
std::string_view to_string(BranchStatus s);

struct BranchDiagnostic {
  std::size_t index = 0; ///< 0-based position of the path edge
  Edge edge;             ///< (u_i, u_{i+1}) in path order
  BranchStatus status = BranchStatus::Succeeded;
  std::size_t closure_rounds = 0;
  std::size_t residue_size = 0;
  std::size_t clause_count = 0;
  bool tc_prerequisite_failed = false;
};

struct SeparationOutcome {
  Answer answer = Answer::No;
  std::optional<VertexSet> halfspace;
  std::optional<std::size_t> branch;
  std::vector<Vertex> path;
  std::vector<BranchDiagnostic> diagnostics;
  /// Formula of the last branch that reached the 2-SAT stage.
  std::optional<PairFormula> last_formula;
  /// Whether the graph was treated as lying in a certified class.
  bool certified = false;
  /// A model of a certified graph's formula failed verification. This would
  /// contradict the completeness guarantee and is surfaced for auditing.
  bool certificate_contradicted = false;
  /// Short reason for base-case answers ("empty-a", "hulls-intersect", ...).
  std::string_view base_case;
};

/// Solves the pair's formula and verifies the resulting H.
///
/// `certified` means the graph is known to lie in a class where every model
/// gives a halfspace; it only affects how a failed verification is reported.
SeparationOutcome separate_pair(const GeodesicSpace& space, const ShadowClosedPair& pair, bool certified);

struct SeparationOptions {
  /// nullopt: run certify() on the graph.
  std::optional<bool> certified;
};

/// Decides whether complementary halfspaces H, H^c exist with a in H and b in H^c.
///
/// YES answers are always verified halfspaces; NO answers are sound on any
/// graph (every pruning step is a necessary condition). UNKNOWN arises only on
/// graphs outside the certified classes. Throws Error(InvalidArgument) if a
/// and b intersect.
SeparationOutcome halfspace_separation(const GeodesicSpace& space, const VertexSet& a, const VertexSet& b,
                                       const SeparationOptions& options = {});

} // namespace geoconv
