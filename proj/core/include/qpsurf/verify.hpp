#ifndef QPSURF_VERIFY_HPP
#define QPSURF_VERIFY_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpsurf/potential_builder.hpp"
#include "qpsurf/qp.hpp"
#include "qpsurf/surface.hpp"

namespace qpsurf {

struct SubResult {
  std::string name;
  bool pass = true;
  std::string detail;
  bool informational = false;  // reported, never fails the check
};

struct CheckReport {
  std::string name;
  std::string inputs_digest;
  bool pass = true;
  std::vector<SubResult> results;

  void add(std::string sub, bool ok, std::string detail = {});
  void note(std::string sub, bool ok, std::string detail = {});
  /// First failing asserted sub-result.
  [[nodiscard]] const SubResult* first_failure() const;
};

/// Order at which checks compute potentials for comparisons up to order D.
[[nodiscard]] int working_order(int order);

/// 64-bit FNV-1a as 16 hex digits.
[[nodiscard]] std::string digest(std::string_view text);

/// Right-equivalence invariants between mutate_qp(qp(T), arc) and qp(flip(T, arc)).
/// An optional witness maps the mutated QP (vertices relabeled by the flip)
/// onto the flipped one.
[[nodiscard]] CheckReport check_flip_compatibility(const Triangulation& t, std::string_view arc, int order,
                                                   const std::optional<std::string>& witness_text = std::nullopt);

[[nodiscard]] CheckReport check_involution(const QP& q, std::string_view k, int order);

[[nodiscard]] CheckReport check_restriction_commutes(const QP& q, const std::vector<std::string>& keep,
                                                     std::string_view k, int order);

/// Lexicographically least entry sequence over vertex permutations for n <= 8;
/// otherwise the sorted multiset of sorted rows. Returned as text.
[[nodiscard]] std::string canonical_matrix_key(const IntegerMatrix& b);

struct ClassNode {
  std::string digest;
  std::string canonical;  // canonical_matrix_key text
  int depth = 0;
  bool two_acyclic = true;
  std::vector<std::string> path;  // mutation sequence from the root
};

struct ClassEdge {
  std::string from;
  std::string vertex;
  std::string to;
};

struct ClassGraph {
  std::vector<ClassNode> nodes;
  std::vector<ClassEdge> edges;
};

struct ExploreResult {
  CheckReport report;
  ClassGraph graph;
};

/// Breadth-first over mutation sequences up to `depth`, one node per
/// canonical matrix. The input potential is taken as exact.
[[nodiscard]] ExploreResult explore_mutation_class(const QP& q, int depth, int order);

/// Substitution text: lines "<arrow-id> <num>/<den> <arrow-id> ...", each adding
/// a term to the image of the first arrow; unlisted arrows map to the
/// same-named target arrow.
[[nodiscard]] Substitution parse_substitution(std::string_view text, const QuiverPtr& base, const QuiverPtr& target,
                                              int order);

/// Same QP with vertices listed in `order` (a permutation of its vertex ids).
[[nodiscard]] QP with_vertex_order(const QP& q, const std::vector<std::string>& order);

void write_check_report(std::ostream& out, const CheckReport& r);
void write_class_graph(std::ostream& out, const ClassGraph& g);

}  // namespace qpsurf

#endif  // QPSURF_VERIFY_HPP
