#include "qpsurf/potential_builder.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "qpsurf/error.hpp"

namespace qpsurf {

namespace {

int next(int m) { return (m + 1) % 3; }

class Builder {
 public:
  Builder(const Triangulation& t, int order)
      : t_(t), uq_(unreduced_quiver(t)), quiver_(share(uq_.quiver)), order_(order) {
    for (const auto& tri : t.triangles()) {
      if (tri.is_self_folded()) folded_in_[tri.enclosing_loop()] = tri.folded_side();
    }
  }

  UnreducedQP run() {
    PotentialAssembly a;
    for (std::size_t ti = 0; ti < t_.triangles().size(); ++ti) {
      const Triangle& tri = t_.triangles()[ti];
      if (tri.is_self_folded() || !all_arcs(tri)) continue;
      if (auto term = triangle_term(ti, false)) a.triangle_terms.emplace(ti, std::move(*term));
      int loops = 0;
      for (const auto& s : tri.sides) loops += folded_in_.count(s) ? 1 : 0;
      if (loops == 2) {
        if (auto term = triangle_term(ti, true)) {
          a.correction_terms.emplace(ti, std::move(*term));
        } else {
          a.warnings.push_back("triangle " + label(tri) + ": correction term arrows missing");
        }
      }
    }
    for (const auto& p : t_.surface().points) {
      if (!p.is_puncture()) continue;
      const int v = t_.valence(p.id);
      auto term = v == 1 ? enclosed_puncture_term(p, a.warnings) : puncture_cycle(p, a.warnings);
      if (term) a.puncture_terms.emplace(p.id, std::move(*term));
    }

    AlgebraElement sum(quiver_, order_);
    for (const auto& [k, x] : a.triangle_terms) sum += x;
    for (const auto& [k, x] : a.correction_terms) sum += x;
    for (const auto& [k, x] : a.puncture_terms) sum += x;
    QP qp(cyclic_normal_form(Potential(std::move(sum))));
    return UnreducedQP{std::move(uq_), std::move(a), std::move(qp)};
  }

 private:
  static std::string label(const Triangle& tri) {
    return "(" + tri.sides[0] + "," + tri.sides[1] + "," + tri.sides[2] + ")";
  }

  bool all_arcs(const Triangle& tri) const {
    return std::all_of(tri.sides.begin(), tri.sides.end(), [&](const auto& s) { return t_.side(s).is_arc(); });
  }

  std::string folded_copy(const std::string& s) const {
    auto it = folded_in_.find(s);
    return it == folded_in_.end() ? s : it->second;
  }

  /// Arrow from -> to read at corner (t, m); a valence-2 puncture arrow stands in
  /// when the corner contribution was cancelled.
  std::optional<std::uint32_t> arrow_at(std::size_t t, int m, const std::string& from, const std::string& to) const {
    auto a = uq_.corner_arrow(t, m, from, to);
    if (!a) a = uq_.puncture_arrow(from, to);
    if (!a) return std::nullopt;
    return static_cast<std::uint32_t>(*a);
  }

  /// Cycle through arrows listed in the order they are traversed.
  AlgebraElement cycle(std::vector<std::uint32_t> walk, const Rational& c) const {
    std::reverse(walk.begin(), walk.end());
    Path p;
    p.vertex = static_cast<std::uint32_t>(quiver_->arrow(walk.front()).head);
    p.arrows = std::move(walk);
    AlgebraElement x(quiver_, order_);
    x.add_term(p, c);
    return x;
  }

  Rational scalar_of_loop(const std::string& loop) const {
    const Side& f = t_.side(folded_in_.at(loop));
    const Side& l = t_.side(loop);
    const std::string& inner = f.end1 == l.end1 ? f.end2 : f.end1;
    return t_.surface().find_point(inner)->scalar;
  }

  std::optional<AlgebraElement> triangle_term(std::size_t ti, bool folded) const {
    const Triangle& tri = t_.triangles()[ti];
    std::vector<std::uint32_t> walk;
    Rational c = 1;
    for (int m = 0; m < 3; ++m) {
      std::string from = tri.sides[m];
      std::string to = tri.sides[next(m)];
      if (folded) {
        from = folded_copy(from);
        to = folded_copy(to);
      }
      auto a = arrow_at(ti, m, from, to);
      if (!a) return std::nullopt;
      walk.push_back(*a);
    }
    if (folded) {
      for (const auto& s : tri.sides) {
        if (folded_in_.count(s)) c /= scalar_of_loop(s);
      }
    }
    return cycle(std::move(walk), c);
  }

  std::optional<AlgebraElement> enclosed_puncture_term(const MarkedPoint& p, std::vector<std::string>& warnings) const {
    // p sits inside a self-folded triangle with folded side f and loop l; the
    // triangle across l is (l, k, m) and the term runs f -> k -> m -> f.
    for (const auto& [loop, f] : folded_in_) {
      const Side& fs = t_.side(f);
      if (fs.end1 != p.id && fs.end2 != p.id) continue;
      Slot outer{};
      for (const auto& s : t_.slots_of(loop)) {
        if (!t_.triangles()[s.first].is_self_folded()) outer = s;
      }
      const auto& sides = t_.triangles()[outer.first].sides;
      const int m0 = outer.second;
      const std::string& k = sides[next(m0)];
      const std::string& l = sides[next(next(m0))];
      if (!t_.side(k).is_arc() || !t_.side(l).is_arc()) {
        warnings.push_back("puncture '" + p.id + "': side next to its enclosing loop is a boundary segment; no term emitted");
        return std::nullopt;
      }
      auto a1 = arrow_at(outer.first, m0, f, k);
      auto a2 = arrow_at(outer.first, next(m0), k, l);
      auto a3 = arrow_at(outer.first, next(next(m0)), l, f);
      if (!a1 || !a2 || !a3) {
        warnings.push_back("puncture '" + p.id + "': arrows of the enclosed-puncture term missing; no term emitted");
        return std::nullopt;
      }
      return cycle({*a1, *a2, *a3}, -1 / p.scalar);
    }
    warnings.push_back("puncture '" + p.id + "' has valence 1 but is not enclosed by a self-folded triangle");
    return std::nullopt;
  }

  std::optional<AlgebraElement> puncture_cycle(const MarkedPoint& p, std::vector<std::string>& warnings) const {
    const auto& tris = t_.triangles();
    std::optional<Slot> start;
    for (std::size_t ti = 0; ti < tris.size() && !start; ++ti) {
      if (tris[ti].is_self_folded()) continue;
      for (int m = 0; m < 3; ++m) {
        if (t_.corner(ti, m) == p.id) {
          start = Slot{ti, m};
          break;
        }
      }
    }
    if (!start) {
      warnings.push_back("puncture '" + p.id + "' has no corner in a non-self-folded triangle");
      return std::nullopt;
    }
    std::vector<std::uint32_t> walk;
    Slot cur = *start;
    const std::size_t limit = 3 * tris.size() + 3;
    for (std::size_t step = 0;; ++step) {
      if (step > limit) throw std::logic_error("walk around puncture '" + p.id + "' does not close");
      const Triangle& tri = tris[cur.first];
      if (!tri.is_self_folded()) {
        const std::string from = folded_copy(tri.sides[cur.second]);
        const std::string to = folded_copy(tri.sides[next(cur.second)]);
        auto a = arrow_at(cur.first, cur.second, from, to);
        if (!a) {
          warnings.push_back("puncture '" + p.id + "': no arrow " + from + " -> " + to + "; no term emitted");
          return std::nullopt;
        }
        walk.push_back(*a);
      }
      cur = t_.other_slot({cur.first, next(cur.second)});
      if (cur == *start) break;
    }
    return cycle(std::move(walk), p.scalar);
  }

  const Triangulation& t_;
  UnreducedQuiver uq_;
  QuiverPtr quiver_;
  int order_;
  std::map<std::string, std::string> folded_in_;  // enclosing loop -> folded side
};

}  // namespace

UnreducedQP build_unreduced_qp(const Triangulation& t, int order) {
  if (order < 1) throw PreconditionError("truncation order must be at least 1");
  return Builder(t, order).run();
}

Potential unreduced_potential(const Triangulation& t, int order) {
  return build_unreduced_qp(t, order).qp.potential();
}

int unreduced_degree(const Triangulation& t) {
  const int bound = 3 * static_cast<int>(t.triangles().size()) + 3;
  return std::max(1, build_unreduced_qp(t, bound).qp.potential().element().max_degree());
}

TriangulationQP build_triangulation_qp(const Triangulation& t, int order) {
  UnreducedQP u = build_unreduced_qp(t, order);
  SplitResult split = split_qp(u.qp);
  const IntegerMatrix expected = arrow_multiplicities(quiver_from_matrix(signed_adjacency(t)));
  if (!(arrow_multiplicities(split.reduced.quiver()) == expected)) {
    throw std::logic_error("reduced quiver of the triangulation differs from its signed adjacency quiver");
  }
  return TriangulationQP{std::move(u), std::move(split)};
}

QP qp_of_triangulation(const Triangulation& t, int order) { return build_triangulation_qp(t, order).split.reduced; }

std::map<std::string, Rational> parse_scalars(std::string_view text) {
  std::map<std::string, Rational> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ParseError("scalar override '" + std::string(item) + "' is not of the form <puncture>=<rational>");
    }
    out[std::string(item.substr(0, eq))] = parse_rational(item.substr(eq + 1));
    pos = comma + 1;
  }
  return out;
}

Triangulation with_scalars(const Triangulation& t, const std::map<std::string, Rational>& scalars) {
  MarkedSurface s = t.surface();
  for (const auto& [id, x] : scalars) {
    auto it = std::find_if(s.points.begin(), s.points.end(), [&](const auto& p) { return p.id == id; });
    if (it == s.points.end() || !it->is_puncture()) throw PreconditionError("'" + id + "' is not a puncture");
    if (x == 0) throw PreconditionError("puncture scalar for '" + id + "' must be nonzero");
    it->scalar = x;
  }
  return Triangulation(std::move(s), t.sides(), t.triangles());
}

}  // namespace qpsurf
