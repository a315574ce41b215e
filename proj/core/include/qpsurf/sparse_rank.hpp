#ifndef QPSURF_SPARSE_RANK_HPP
#define QPSURF_SPARSE_RANK_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qpsurf/rational.hpp"

namespace qpsurf {

/// Sparse rational vector: (column, nonzero value) pairs sorted by column.
using SparseVector = std::vector<std::pair<std::uint32_t, Rational>>;

/// Incrementally built row-echelon basis over the rationals. Each stored row
/// has leading (smallest) column equal to its pivot, normalized to 1.
class RowEchelon {
 public:
  /// Reduces v against the basis; returns the remainder (empty iff v is in the span).
  [[nodiscard]] SparseVector reduce(const SparseVector& v) const;
  /// Adds v to the span; returns true iff it was independent.
  bool insert(const SparseVector& v);
  [[nodiscard]] bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  /// Pivot columns in increasing order.
  [[nodiscard]] std::vector<std::uint32_t> pivot_columns() const;

 private:
  std::map<std::uint32_t, SparseVector> rows_;  // pivot column -> row
};

/// Rank of a dense rational matrix (independent reference implementation).
[[nodiscard]] std::size_t dense_rank(std::vector<std::vector<Rational>> m);

}  // namespace qpsurf

#endif  // QPSURF_SPARSE_RANK_HPP
