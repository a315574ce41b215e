#ifndef QPSURF_QP_HPP
#define QPSURF_QP_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpsurf/diagnostics.hpp"
#include "qpsurf/path_algebra.hpp"

namespace qpsurf {

/// Quiver with potential at a fixed truncation order. The potential is not
/// required to be in QP form at construction; validate_qp() reports it.
class QP {
 public:
  explicit QP(Potential potential) : potential_(std::move(potential)) {}
  QP(QuiverPtr quiver, int order) : potential_(std::move(quiver), order) {}

  [[nodiscard]] const Quiver& quiver() const { return potential_.quiver(); }
  [[nodiscard]] const QuiverPtr& quiver_ptr() const { return potential_.quiver_ptr(); }
  [[nodiscard]] const Potential& potential() const { return potential_; }
  [[nodiscard]] int order() const { return potential_.order(); }

  friend bool operator==(const QP& a, const QP& b) { return a.potential_ == b.potential_; }

 private:
  Potential potential_;
};

/// Potential terms are cycles of positive length and no two stored cycles are
/// rotations of each other. Offending pairs are named in the messages.
[[nodiscard]] Diagnostics validate_qp(const QP& q);

/// Degree-2 component zero.
[[nodiscard]] bool is_reduced(const QP& q);
/// Potential purely of degree 2 whose cyclic derivatives span the arrow space.
[[nodiscard]] bool is_trivial(const QP& q);

/// [S] + sum over hooks ab at k of b* a* [a.b] on the premutated quiver.
/// Terms are first rotated so that no cycle begins at k.
[[nodiscard]] QP premutate_qp(const QP& q, std::string_view k);

struct SplitResult {
  QP trivial;
  QP reduced;
  /// Right-equivalence on the input quiver with witness(S) cyclically
  /// equivalent to trivial + reduced at the working order.
  Substitution witness;
  /// Pairs (a_j, b_j) with trivial potential sum a_j b_j.
  std::vector<std::pair<std::string, std::string>> trivial_pairs;
  /// Number of unitriangular passes applied after the degree-2 basis change.
  int passes = 0;
};

/// Splits q into trivial and reduced parts. Throws PreconditionError when
/// validate_qp fails.
[[nodiscard]] SplitResult split_qp(const QP& q);

/// Reduced part of the premutation.
[[nodiscard]] QP mutate_qp(const QP& q, std::string_view k);

/// Keeps the arrows with both endpoints in `keep` and drops every potential
/// term through another arrow. The vertex set is unchanged.
[[nodiscard]] QP restrict_qp(const QP& q, const std::vector<std::string>& keep);

/// Rewrites an element over a quiver whose arrow ids are a subset of the
/// target's (matching endpoints). Throws PreconditionError on a missing arrow.
[[nodiscard]] AlgebraElement transport_element(const AlgebraElement& x, const QuiverPtr& target);

/// Renames vertices (and nothing else) through `from -> to` pairs.
[[nodiscard]] QP rename_vertices(const QP& q, const std::vector<std::pair<std::string, std::string>>& renames);

/// Same QP stored at another truncation order.
[[nodiscard]] QP with_order(const QP& q, int order);

// "truncation: D", then the quiver block, then "potential:" and element lines.
void write_qp(std::ostream& out, const QP& q);
[[nodiscard]] std::string qp_to_string(const QP& q);
[[nodiscard]] QP parse_qp(std::string_view text);

}  // namespace qpsurf

#endif  // QPSURF_QP_HPP
