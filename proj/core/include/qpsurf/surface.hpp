#ifndef QPSURF_SURFACE_HPP
#define QPSURF_SURFACE_HPP

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpsurf/diagnostics.hpp"
#include "qpsurf/quiver.hpp"
#include "qpsurf/rational.hpp"

namespace qpsurf {

/// Marked point; `boundary` is the 1-based boundary component, 0 for a puncture.
struct MarkedPoint {
  std::string id;
  int boundary = 0;
  Rational scalar = 0;  // x_p, punctures only

  [[nodiscard]] bool is_puncture() const { return boundary == 0; }
};

struct MarkedSurface {
  int genus = 0;
  int boundary_components = 0;
  std::vector<MarkedPoint> points;  // sorted by id

  [[nodiscard]] const MarkedPoint* find_point(std::string_view id) const;
  [[nodiscard]] std::size_t puncture_count() const;
};

enum class SideKind { arc, boundary };

/// Arc or boundary segment. Endpoints are stored in lexicographic order.
struct Side {
  std::string id;
  SideKind kind = SideKind::arc;
  std::string end1;
  std::string end2;
  int on = 0;  // boundary component of a boundary segment

  [[nodiscard]] bool is_arc() const { return kind == SideKind::arc; }
  [[nodiscard]] bool is_loop() const { return end1 == end2; }
};

/// Side ids listed clockwise. Corner m sits between sides m and m+1, so side m
/// joins corners m-1 and m.
struct Triangle {
  std::array<std::string, 3> sides;

  /// A repeated side id marks a self-folded triangle.
  [[nodiscard]] bool is_self_folded() const;
  /// Folded side (the repeated id) and enclosing loop; self-folded only.
  [[nodiscard]] const std::string& folded_side() const;
  [[nodiscard]] const std::string& enclosing_loop() const;

  friend bool operator==(const Triangle&, const Triangle&) = default;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// (triangle index, slot index).
using Slot = std::pair<std::size_t, int>;

/// Ideal triangulation of a marked surface, stored canonically: points and
/// sides sorted by id, each triple rotated to its least rotation, triangles
/// sorted. Construction only normalizes; validate_triangulation() checks.
class Triangulation {
 public:
  Triangulation(MarkedSurface surface, std::vector<Side> sides, std::vector<Triangle> triangles);

  [[nodiscard]] const MarkedSurface& surface() const { return surface_; }
  [[nodiscard]] const std::vector<Side>& sides() const { return sides_; }
  [[nodiscard]] const std::vector<Triangle>& triangles() const { return triangles_; }

  [[nodiscard]] const Side* find_side(std::string_view id) const;
  [[nodiscard]] const Side& side(std::string_view id) const;  // throws PreconditionError
  /// Arc ids in lexicographic order; these are the vertices of Q(tau).
  [[nodiscard]] std::vector<std::string> arc_ids() const;
  [[nodiscard]] std::size_t boundary_segment_count() const;
  /// Slots holding side `id`, in (triangle, slot) order.
  [[nodiscard]] std::vector<Slot> slots_of(std::string_view id) const;
  /// The slot of the same side other than `s`. Throws for boundary segments.
  [[nodiscard]] Slot other_slot(Slot s) const;
  /// Marked point at corner m of triangle t. Throws PreconditionError if the
  /// sides' endpoints do not determine the corners uniquely.
  [[nodiscard]] const std::string& corner(std::size_t t, int m) const;
  /// Number of arc ends at a marked point (loops count twice).
  [[nodiscard]] int valence(std::string_view point) const;

  friend bool operator==(const Triangulation& a, const Triangulation& b);

 private:
  void solve_corners();

  MarkedSurface surface_;
  std::vector<Side> sides_;
  std::vector<Triangle> triangles_;
  std::vector<std::array<std::string, 3>> corners_;
  std::string corner_error_;
};

[[nodiscard]] Diagnostics validate_triangulation(const Triangulation& t);
/// Throws PreconditionError carrying the first diagnostic.
void require_valid(const Triangulation& t);

/// Expected arc count 6g + 3b + 3p + c - 6.
[[nodiscard]] long long expected_rank(const Triangulation& t);

/// Identity except that folded sides map to their enclosing loops.
[[nodiscard]] std::map<std::string, std::string> fold_map(const Triangulation& t);

/// One oriented adjacency i -> j read off corner `corner` of triangle `triangle`.
struct Contribution {
  std::size_t triangle = 0;
  int corner = 0;
  std::string from;
  std::string to;
};

/// Contributions of every non-self-folded triangle, in (triangle, corner, from, to) order.
[[nodiscard]] std::vector<Contribution> arrow_contributions(const Triangulation& t);

/// Signed adjacency matrix on arc ids.
[[nodiscard]] IntegerMatrix signed_adjacency(const Triangulation& t);

/// Where an arrow of the unreduced quiver comes from.
struct ArrowProvenance {
  enum class Kind { corner, puncture } kind = Kind::corner;
  std::size_t triangle = 0;  // corner arrows
  int corner = 0;
  std::string puncture;  // puncture arrows (valence-2 pairs)
};

struct UnreducedQuiver {
  Quiver quiver;
  std::vector<ArrowProvenance> provenance;  // indexed like quiver.arrows()

  /// Arrow i -> j from the corner (triangle, corner), if it survived cancellation.
  [[nodiscard]] std::optional<std::size_t> corner_arrow(std::size_t triangle, int corner, std::string_view from,
                                                        std::string_view to) const;
  /// Added arrow i -> j for a valence-2 puncture between i and j, if any.
  [[nodiscard]] std::optional<std::size_t> puncture_arrow(std::string_view from, std::string_view to) const;
};

/// Surviving corner arrows are named "i>j#k" (k counting in provenance order);
/// the opposite pair added at a valence-2 puncture p is named "i>j@p".
[[nodiscard]] UnreducedQuiver unreduced_quiver(const Triangulation& t);

struct FlipResult {
  Triangulation triangulation;
  std::string old_arc;
  std::string new_arc;
  /// old id -> new id for every arc (identity except the flipped arc).
  std::vector<std::pair<std::string, std::string>> relabel;
};

/// Replaces the diagonal of the quadrilateral around `arc`. Throws
/// PreconditionError for folded sides, boundary segments and unknown ids;
/// std::logic_error if the output fails validation or the exchange-matrix check.
[[nodiscard]] FlipResult flip(const Triangulation& t, std::string_view arc);

/// Arcs that can be flipped (every arc except folded sides).
[[nodiscard]] std::vector<std::string> flippable_arcs(const Triangulation& t);

// Line-based text format; see README. Serialization is canonical.
void write_triangulation(std::ostream& out, const Triangulation& t);
[[nodiscard]] std::string triangulation_to_string(const Triangulation& t);
[[nodiscard]] Triangulation parse_triangulation(std::string_view text);

}  // namespace qpsurf

#endif  // QPSURF_SURFACE_HPP
