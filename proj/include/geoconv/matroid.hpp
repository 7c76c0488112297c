#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "geoconv/graph.hpp"

namespace geoconv {

/// A basis as a sorted list of ground-set elements.
using Basis = std::vector<std::int32_t>;

struct MatroidLimits {
  std::size_t max_ground_size = 16;
  std::size_t max_bases = 4096;
};

/// (A, B, i): no j in B \ A makes (A \ {i}) + {j} a basis.
struct ExchangeWitness {
  Basis a;
  Basis b;
  std::int32_t element = 0;
};

/// Checks the basis exchange property on an explicit basis list.
/// Returns the first violation in list order, or nullopt when it holds.
std::optional<ExchangeWitness> find_exchange_violation(std::span<const Basis> bases);

inline bool validate_exchange_property(std::span<const Basis> bases) {
  return !find_exchange_violation(bases).has_value();
}

/// Matroid given by its explicit list of bases, sorted lexicographically.
class Matroid {
public:
  /// Validates sizes, ranges, duplicates and the exchange property.
  /// Throws Error(InvalidArgument | ExchangeViolation | TooLarge).
  static Matroid from_bases(std::size_t ground_size, std::size_t rank, std::vector<Basis> bases,
                            const MatroidLimits& limits = {});

  std::size_t ground_size() const noexcept { return ground_size_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<Basis>& bases() const noexcept { return bases_; }

private:
  std::size_t ground_size_ = 0;
  std::size_t rank_ = 0;
  std::vector<Basis> bases_;
};

/// One vertex per basis (in list order); adjacent iff the bases differ by a
/// single exchange.
Graph basis_graph(const Matroid& m);

/// U(rank, ground_size): every rank-subset is a basis.
Matroid uniform_matroid(std::size_t rank, std::size_t ground_size, const MatroidLimits& limits = {});

/// Cycle matroid of a connected graph: ground set = g.edges() (in that
/// order), bases = spanning trees.
Matroid graphic_matroid(const Graph& g, const MatroidLimits& limits = {});

} // namespace geoconv
