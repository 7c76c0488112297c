#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

namespace geoconv::twosat {

struct Literal {
  std::int32_t var = 0;
  bool positive = true;

  Literal operator~() const noexcept { return {var, !positive}; }
  friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal pos(std::int32_t var) { return {var, true}; }
inline Literal neg(std::int32_t var) { return {var, false}; }

/// Disjunction of two literals.
struct Clause {
  Literal first;
  Literal second;
  friend bool operator==(const Clause&, const Clause&) = default;
};

class Formula {
public:
  explicit Formula(std::size_t var_count = 0) : var_count_(var_count) {}

  std::size_t var_count() const noexcept { return var_count_; }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }

  /// Throws Error(InvalidArgument) for a variable out of range.
  void add(Literal a, Literal b);
  void add_implication(Literal from, Literal to) { add(~from, to); }
  void add_equality(std::int32_t x, std::int32_t y) {
    add(pos(x), neg(y));
    add(neg(x), pos(y));
  }

private:
  std::size_t var_count_ = 0;
  std::vector<Clause> clauses_;
};

using Assignment = std::vector<bool>;

bool satisfies(const Formula& f, const Assignment& values);

/// Implication-graph SCC method. Returns nullopt when unsatisfiable.
///
/// Deterministic: a variable is true iff its positive literal's component is
/// completed before its negative literal's in a Tarjan pass that visits
/// literals in order not-x0, x0, not-x1, ...; unconstrained variables come
/// out false.
std::optional<Assignment> solve(const Formula& f);

/// Exhaustive model count. Throws Error(TooLarge) above max_vars variables.
std::uint64_t count_models_bruteforce(const Formula& f, std::size_t max_vars = 25);

/// DIMACS CNF with 1-based variables.
void write_dimacs(std::ostream& out, const Formula& f);

} // namespace geoconv::twosat
