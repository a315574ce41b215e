#ifndef QPSURF_POTENTIAL_BUILDER_HPP
#define QPSURF_POTENTIAL_BUILDER_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qpsurf/qp.hpp"
#include "qpsurf/surface.hpp"

namespace qpsurf {

/// The pieces of the unreduced potential, each over the unreduced quiver.
struct PotentialAssembly {
  std::map<std::size_t, AlgebraElement> triangle_terms;    // oriented triangles, by triangle index
  std::map<std::size_t, AlgebraElement> correction_terms;  // triangles next to two self-folded ones
  std::map<std::string, AlgebraElement> puncture_terms;    // by puncture id
  std::vector<std::string> warnings;
};

struct UnreducedQP {
  UnreducedQuiver quiver;
  PotentialAssembly assembly;
  QP qp;  // on quiver.quiver, potential in cyclic normal form
};

/// Unreduced QP of a valid triangulation at truncation order `order`.
[[nodiscard]] UnreducedQP build_unreduced_qp(const Triangulation& t, int order);
[[nodiscard]] Potential unreduced_potential(const Triangulation& t, int order);

struct TriangulationQP {
  UnreducedQP unreduced;
  SplitResult split;

  [[nodiscard]] const QP& qp() const { return split.reduced; }
};

/// Reduced part of the unreduced QP. Throws std::logic_error if its quiver
/// differs from the signed adjacency quiver (arrow counts per vertex pair).
[[nodiscard]] TriangulationQP build_triangulation_qp(const Triangulation& t, int order);
[[nodiscard]] QP qp_of_triangulation(const Triangulation& t, int order);

/// Largest term degree of the unreduced potential; truncating at or above it is exact.
[[nodiscard]] int unreduced_degree(const Triangulation& t);

/// "p1=2/1,p2=3/1" -> {p1: 2, p2: 3}. Throws ParseError.
[[nodiscard]] std::map<std::string, Rational> parse_scalars(std::string_view text);
/// Same triangulation with the given puncture scalars replaced. Throws
/// PreconditionError for unknown or non-puncture ids and zero values.
[[nodiscard]] Triangulation with_scalars(const Triangulation& t, const std::map<std::string, Rational>& scalars);

}  // namespace qpsurf

#endif  // QPSURF_POTENTIAL_BUILDER_HPP
