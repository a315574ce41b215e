#ifndef QPSURF_JACOBIAN_HPP
#define QPSURF_JACOBIAN_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qpsurf/qp.hpp"

namespace qpsurf {

/// One cyclic derivative per arrow, in arrow order.
[[nodiscard]] std::vector<AlgebraElement> jacobian_generators(const QP& q);

/// All paths of length <= order, sorted (by length, then arrows, then vertex).
[[nodiscard]] std::vector<Path> enumerate_paths(const Quiver& q, int order);

struct DimensionRow {
  int order = 0;
  std::size_t paths = 0;       // paths of length <= order
  std::size_t ideal_rank = 0;  // rank of the ideal span modulo longer paths
  std::size_t dim = 0;         // paths - ideal_rank
  /// Every path of length order and order+1 lies in the span at order+1.
  /// Unknown (false) for the last row.
  bool certified = false;
};

struct DimensionReport {
  int max_order = 0;
  std::vector<DimensionRow> rows;  // orders 0..max_order
  std::optional<int> certified_order;

  /// Quotient dimension at the first certified order; nullopt if none.
  [[nodiscard]] std::optional<std::size_t> dimension() const;
  /// dims at orders 1..d (d <= max_order).
  [[nodiscard]] std::vector<std::size_t> dims_up_to(int d) const;
};

/// Throws PreconditionError if order < 1 or validate_qp fails. The potential
/// is used as stored; terms beyond its own truncation order are unknown.
[[nodiscard]] DimensionReport truncated_quotient_dim(const QP& q, int order);

/// Increasing orders until the certificate fires or max_order is reached.
[[nodiscard]] DimensionReport finite_dim_evidence(const QP& q, int max_order);

struct RigidityReport {
  int max_order = 0;
  bool rigid = false;
  std::size_t cycle_classes = 0;  // rotation classes of cycles tested
  std::optional<Path> witness;    // least rotation of the first class outside the span
  std::string witness_text;
};

/// Tests every cycle class of length <= order against the ideal span plus
/// rotation differences.
[[nodiscard]] RigidityReport is_rigid_up_to(const QP& q, int order);

// "order paths ideal_rank dim certified" table.
void write_dimension_report(std::ostream& out, const DimensionReport& r);
void write_rigidity_report(std::ostream& out, const RigidityReport& r);

}  // namespace qpsurf

#endif  // QPSURF_JACOBIAN_HPP
