#ifndef QPSURF_PATH_ALGEBRA_HPP
#define QPSURF_PATH_ALGEBRA_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qpsurf/quiver.hpp"
#include "qpsurf/rational.hpp"

namespace qpsurf {

using QuiverPtr = std::shared_ptr<const Quiver>;

[[nodiscard]] inline QuiverPtr share(Quiver q) { return std::make_shared<const Quiver>(std::move(q)); }

/// A path a_1 a_2 ... a_d composed as functions: t(a_j) = h(a_{j+1}), so the
/// path starts at t(a_d) and ends at h(a_1). Length-zero paths carry their
/// vertex; for longer paths `vertex` is h(a_1).
///
/// Ordering is by length, then lexicographically by arrow index (arrow indices
/// follow the lexicographic order of arrow ids), then by vertex.
struct Path {
  std::vector<std::uint32_t> arrows;
  std::uint32_t vertex = 0;

  [[nodiscard]] std::size_t length() const { return arrows.size(); }

  friend bool operator==(const Path&, const Path&) = default;
  friend bool operator<(const Path& a, const Path& b) {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    return a.vertex < b.vertex;
  }
};

[[nodiscard]] std::size_t path_head(const Quiver& q, const Path& p);
[[nodiscard]] std::size_t path_tail(const Quiver& q, const Path& p);
[[nodiscard]] bool is_cycle(const Quiver& q, const Path& p);
/// Builds a path from arrow ids, checking composability.
[[nodiscard]] Path make_path(const Quiver& q, const std::vector<std::string>& arrow_ids);
[[nodiscard]] std::string path_to_string(const Quiver& q, const Path& p);

/// Least rotation of a cyclic arrow word (lexicographic, earliest index on ties).
[[nodiscard]] std::vector<std::uint32_t> least_rotation(const std::vector<std::uint32_t>& word);

/// Finite linear combination of paths of length <= order(), with exact
/// rational coefficients. Stands in for the complete path algebra modulo
/// the (order+1)-th power of the arrow ideal.
class AlgebraElement {
 public:
  using Terms = std::map<Path, Rational>;

  AlgebraElement(QuiverPtr quiver, int order);

  [[nodiscard]] static AlgebraElement idempotent(QuiverPtr quiver, int order, std::string_view vertex);
  [[nodiscard]] static AlgebraElement arrow(QuiverPtr quiver, int order, std::string_view arrow_id);
  [[nodiscard]] static AlgebraElement path(QuiverPtr quiver, int order, const std::vector<std::string>& arrow_ids,
                                           const Rational& coefficient = 1);

  [[nodiscard]] const QuiverPtr& quiver_ptr() const { return quiver_; }
  [[nodiscard]] const Quiver& quiver() const { return *quiver_; }
  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }

  /// Adds c * p; drops p when longer than order(); removes zero coefficients.
  void add_term(const Path& p, const Rational& c);
  [[nodiscard]] Rational coefficient(const Path& p) const;

  /// Terms of length exactly d.
  [[nodiscard]] AlgebraElement homogeneous_part(std::size_t d) const;
  /// Terms of length <= d (and the order lowered to d when d < order()).
  [[nodiscard]] AlgebraElement truncated(int d) const;
  /// Same terms, stored at a different truncation order (dropping longer terms).
  [[nodiscard]] AlgebraElement with_order(int order) const;
  /// Length of the shortest term; -1 for zero.
  [[nodiscard]] int min_degree() const;
  [[nodiscard]] int max_degree() const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Rational& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& c) { return a *= c; }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= Rational(-1); }
  /// Concatenation product, truncated at the common order.
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);

  /// Same quiver (by value) and same terms; orders may differ.
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  void check_compatible(const AlgebraElement& other, const char* op) const;

  QuiverPtr quiver_;
  int order_;
  Terms terms_;
};

/// Bilinear concatenation product; mixed quivers or orders throw PreconditionError.
[[nodiscard]] AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

/// An element all of whose terms are cycles of positive length.
class Potential {
 public:
  Potential(QuiverPtr quiver, int order);
  /// Throws PreconditionError if some term is not a cycle of positive length.
  explicit Potential(AlgebraElement element);

  [[nodiscard]] const AlgebraElement& element() const { return element_; }
  [[nodiscard]] const Quiver& quiver() const { return element_.quiver(); }
  [[nodiscard]] const QuiverPtr& quiver_ptr() const { return element_.quiver_ptr(); }
  [[nodiscard]] int order() const { return element_.order(); }
  [[nodiscard]] bool is_zero() const { return element_.is_zero(); }

  /// No two distinct stored cycles are rotations of each other.
  [[nodiscard]] bool is_qp_form() const;

  friend bool operator==(const Potential& a, const Potential& b) { return a.element_ == b.element_; }

 private:
  AlgebraElement element_;
};

/// Linear extension of the cyclic derivative to every term.
[[nodiscard]] AlgebraElement cyclic_derivative(const Potential& s, std::string_view arrow_id);
[[nodiscard]] AlgebraElement cyclic_derivative(const Potential& s, std::uint32_t arrow_index);

/// Every term rotated to its least rotation; like terms merged.
[[nodiscard]] Potential cyclic_normal_form(const Potential& s);
/// Cyclic normal form of an element that is a combination of cycles
/// (possibly with non-cyclic terms, which are kept as they are).
[[nodiscard]] AlgebraElement cyclic_normal_form(const AlgebraElement& x);

[[nodiscard]] bool cyclically_equivalent(const Potential& a, const Potential& b);

/// Algebra homomorphism between truncated path algebras on the same vertex
/// set, fixing idempotents, given by the images of the base arrows.
class Substitution {
 public:
  /// Throws PreconditionError if images have degree-0 terms or endpoint mismatches.
  Substitution(QuiverPtr base, QuiverPtr target, int order, std::vector<AlgebraElement> images);

  [[nodiscard]] static Substitution identity(QuiverPtr quiver, int order);

  [[nodiscard]] const Quiver& base() const { return *base_; }
  [[nodiscard]] const Quiver& target() const { return *target_; }
  [[nodiscard]] const QuiverPtr& base_ptr() const { return base_; }
  [[nodiscard]] const QuiverPtr& target_ptr() const { return target_; }
  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] const std::vector<AlgebraElement>& images() const { return images_; }
  [[nodiscard]] const AlgebraElement& image(std::uint32_t arrow_index) const { return images_[arrow_index]; }

  [[nodiscard]] AlgebraElement apply(const AlgebraElement& x) const;
  [[nodiscard]] Potential apply(const Potential& s) const;

  /// (this o first)(a) = this(first(a)).
  [[nodiscard]] Substitution after(const Substitution& first) const;

 private:
  QuiverPtr base_;
  QuiverPtr target_;
  int order_;
  std::vector<AlgebraElement> images_;
};

[[nodiscard]] inline AlgebraElement apply_substitution(const Substitution& f, const AlgebraElement& x) {
  return f.apply(x);
}

/// True iff the degree-1 part of f is invertible on every block of arrows i -> j.
[[nodiscard]] bool substitution_is_isomorphism(const Substitution& f);

// Text format: one term per line, "<num>/<den> <arrow-id> <arrow-id> ..." or
// "<num>/<den> e:<vertex>" for idempotents; canonical term order on output.
void write_element(std::ostream& out, const AlgebraElement& x);
[[nodiscard]] std::string element_to_string(const AlgebraElement& x);
[[nodiscard]] AlgebraElement parse_element(std::string_view text, QuiverPtr quiver, int order);
[[nodiscard]] AlgebraElement parse_element_lines(const std::vector<std::string>& lines, QuiverPtr quiver, int order);

}  // namespace qpsurf

#endif  // QPSURF_PATH_ALGEBRA_HPP
