#include "qpsurf/jacobian.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "qpsurf/error.hpp"
#include "qpsurf/sparse_rank.hpp"

namespace qpsurf {

namespace {

void require_qp(const QP& q, int order) {
  if (order < 1) throw PreconditionError("truncation order must be at least 1");
  if (auto d = validate_qp(q); !d.ok) throw PreconditionError("not a quiver with potential: " + d.messages.front());
}

/// Generators at `order`, each with its minimal degree and endpoints.
struct Generator {
  AlgebraElement element;
  int min_degree;
  std::size_t head;  // all terms run from tail to head
  std::size_t tail;
};

std::vector<Generator> generators_at(const QP& q, int order) {
  std::vector<Generator> out;
  const Quiver& quiver = q.quiver();
  for (std::uint32_t a = 0; a < quiver.arrow_count(); ++a) {
    AlgebraElement g = cyclic_derivative(q.potential(), a).with_order(order);
    if (g.is_zero()) continue;
    const int md = g.min_degree();
    out.push_back({std::move(g), md, quiver.arrow(a).tail, quiver.arrow(a).head});
  }
  return out;
}

Path concat(const Path& p, const Path& w, const Path& s) {
  Path r;
  r.arrows.reserve(p.length() + w.length() + s.length());
  r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.end());
  r.arrows.insert(r.arrows.end(), w.arrows.begin(), w.arrows.end());
  r.arrows.insert(r.arrows.end(), s.arrows.begin(), s.arrows.end());
  r.vertex = !p.arrows.empty() ? p.vertex : (!w.arrows.empty() ? w.vertex : s.vertex);
  return r;
}

/// Calls f(p, g, s) for every product p * g * s within degree `order`.
template <class F>
void for_each_product(const Quiver& quiver, const std::vector<Path>& paths, const std::vector<Generator>& gens,
                      int order, F&& f) {
  std::vector<std::vector<const Path*>> by_tail(quiver.vertex_count());
  std::vector<std::vector<const Path*>> by_head(quiver.vertex_count());
  for (const auto& p : paths) {
    by_tail[path_tail(quiver, p)].push_back(&p);
    by_head[path_head(quiver, p)].push_back(&p);
  }
  for (const auto& g : gens) {
    for (const Path* p : by_tail[g.head]) {
      const int lp = static_cast<int>(p->length());
      if (lp + g.min_degree > order) break;  // paths are sorted by length
      for (const Path* s : by_head[g.tail]) {
        if (lp + static_cast<int>(s->length()) + g.min_degree > order) break;
        f(*p, g, *s);
      }
    }
  }
}

}  // namespace

std::vector<AlgebraElement> jacobian_generators(const QP& q) {
  std::vector<AlgebraElement> out;
  for (std::uint32_t a = 0; a < q.quiver().arrow_count(); ++a) out.push_back(cyclic_derivative(q.potential(), a));
  return out;
}

std::vector<Path> enumerate_paths(const Quiver& q, int order) {
  std::vector<Path> out;
  std::vector<Path> layer;
  for (std::uint32_t v = 0; v < q.vertex_count(); ++v) layer.push_back(Path{{}, v});
  out = layer;
  for (int d = 1; d <= order; ++d) {
    std::vector<Path> nextl;
    for (const auto& p : layer) {
      const std::size_t tail = path_tail(q, p);
      for (std::uint32_t a = 0; a < q.arrow_count(); ++a) {
        if (q.arrow(a).head != tail) continue;
        Path r;
        r.arrows = p.arrows;
        r.arrows.push_back(a);
        r.vertex = static_cast<std::uint32_t>(q.arrow(r.arrows.front()).head);
        nextl.push_back(std::move(r));
      }
    }
    std::sort(nextl.begin(), nextl.end());
    out.insert(out.end(), nextl.begin(), nextl.end());
    layer = std::move(nextl);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> DimensionReport::dimension() const {
  if (!certified_order) return std::nullopt;
  return rows[static_cast<std::size_t>(*certified_order)].dim;
}

std::vector<std::size_t> DimensionReport::dims_up_to(int d) const {
  std::vector<std::size_t> out;
  for (int k = 1; k <= d && k <= max_order; ++k) out.push_back(rows[static_cast<std::size_t>(k)].dim);
  return out;
}

DimensionReport truncated_quotient_dim(const QP& q, int order) {
  require_qp(q, order);
  const Quiver& quiver = q.quiver();
  const std::vector<Path> paths = enumerate_paths(quiver, order);
  std::map<Path, std::uint32_t> column;
  for (std::uint32_t i = 0; i < paths.size(); ++i) column.emplace(paths[i], i);

  // Columns run from short to long paths, so every stored row's pivot is its
  // shortest path and the rank modulo paths longer than d counts the pivots
  // of length <= d.
  RowEchelon ech;
  const auto gens = generators_at(q, order);
  for_each_product(quiver, paths, gens, order, [&](const Path& p, const Generator& g, const Path& s) {
    SparseVector row;
    for (const auto& [w, c] : g.element.terms()) {
      if (p.length() + w.length() + s.length() > static_cast<std::size_t>(order)) continue;
      row.emplace_back(column.at(concat(p, w, s)), c);
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    ech.insert(row);
  });

  DimensionReport r;
  r.max_order = order;
  std::vector<std::size_t> paths_upto(static_cast<std::size_t>(order) + 1, 0);
  std::vector<std::size_t> rank_upto(static_cast<std::size_t>(order) + 1, 0);
  for (const auto& p : paths) ++paths_upto[p.length()];
  for (auto c : ech.pivot_columns()) ++rank_upto[paths[c].length()];
  for (int d = 1; d <= order; ++d) {
    paths_upto[d] += paths_upto[d - 1];
    rank_upto[d] += rank_upto[d - 1];
  }
  for (int d = 0; d <= order; ++d) {
    DimensionRow row;
    row.order = d;
    row.paths = paths_upto[d];
    row.ideal_rank = rank_upto[d];
    row.dim = row.paths - row.ideal_rank;
    r.rows.push_back(row);
  }
  // Paths of lengths d and d+1 all lie in the span at order d+1 exactly when
  // dim_{d+1} = dim_{d-1}.
  for (int d = 0; d + 1 <= order; ++d) {
    const std::size_t below = d == 0 ? 0 : r.rows[d - 1].dim;
    r.rows[d].certified = r.rows[d + 1].dim == below;
    if (r.rows[d].certified && !r.certified_order) r.certified_order = d;
  }
  return r;
}

DimensionReport finite_dim_evidence(const QP& q, int max_order) {
  require_qp(q, max_order);
  DimensionReport r;
  for (int d = 1; d <= max_order; ++d) {
    r = truncated_quotient_dim(q, d);
    if (r.certified_order) break;
  }
  return r;
}

RigidityReport is_rigid_up_to(const QP& q, int order) {
  require_qp(q, order);
  const Quiver& quiver = q.quiver();
  const std::vector<Path> paths = enumerate_paths(quiver, order);

  // Coordinates: rotation classes of cycles of positive length.
  std::map<std::vector<std::uint32_t>, std::uint32_t> cls;
  std::vector<Path> reps;
  for (const auto& p : paths) {
    if (p.arrows.empty() || !is_cycle(quiver, p)) continue;
    auto key = least_rotation(p.arrows);
    if (cls.count(key)) continue;
    cls.emplace(key, static_cast<std::uint32_t>(reps.size()));
    Path rep;
    rep.arrows = std::move(key);
    rep.vertex = static_cast<std::uint32_t>(quiver.arrow(rep.arrows.front()).head);
    reps.push_back(std::move(rep));
  }

  // Only closed products matter: the ideal span splits by endpoints.
  RowEchelon ech;
  const auto gens = generators_at(q, order);
  for_each_product(quiver, paths, gens, order, [&](const Path& p, const Generator& g, const Path& s) {
    const std::size_t head = p.arrows.empty() ? g.head : path_head(quiver, p);
    const std::size_t tail = s.arrows.empty() ? g.tail : path_tail(quiver, s);
    if (head != tail) return;
    std::map<std::uint32_t, Rational> acc;
    for (const auto& [w, c] : g.element.terms()) {
      if (p.length() + w.length() + s.length() > static_cast<std::size_t>(order)) continue;
      acc[cls.at(least_rotation(concat(p, w, s).arrows))] += c;
    }
    SparseVector row;
    for (auto& [k, c] : acc) {
      if (c != 0) row.emplace_back(k, c);
    }
    ech.insert(row);
  });

  RigidityReport r;
  r.max_order = order;
  r.cycle_classes = reps.size();
  r.rigid = true;
  for (std::uint32_t k = 0; k < reps.size(); ++k) {
    if (!ech.contains({{k, Rational(1)}})) {
      r.rigid = false;
      r.witness = reps[k];
      r.witness_text = path_to_string(quiver, reps[k]);
      break;
    }
  }
  return r;
}

void write_dimension_report(std::ostream& out, const DimensionReport& r) {
  out << "order paths ideal_rank dim certified\n";
  for (const auto& row : r.rows) {
    out << row.order << ' ' << row.paths << ' ' << row.ideal_rank << ' ' << row.dim << ' '
        << (row.certified ? "yes" : "no") << '\n';
  }
  if (r.certified_order) {
    out << "stabilized at order " << *r.certified_order << ", dimension " << *r.dimension() << '\n';
  } else {
    out << "not stabilized up to order " << r.max_order << '\n';
  }
}

void write_rigidity_report(std::ostream& out, const RigidityReport& r) {
  out << "cycle classes tested: " << r.cycle_classes << '\n';
  if (r.rigid) {
    out << "rigid up to order " << r.max_order << '\n';
  } else {
    out << "not rigid: cycle " << r.witness_text << " is outside the Jacobian ideal modulo rotations at order "
        << r.max_order << '\n';
  }
}

}  // namespace qpsurf
