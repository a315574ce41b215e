#include "qpsurf/surface.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qpsurf/detail/text.hpp"
#include "qpsurf/error.hpp"

namespace qpsurf {

namespace {

std::array<std::string, 3> least_rotation3(const std::array<std::string, 3>& s) {
  std::array<std::string, 3> best = s;
  for (int r = 1; r < 3; ++r) {
    std::array<std::string, 3> rot = {s[r], s[(r + 1) % 3], s[(r + 2) % 3]};
    if (rot < best) best = rot;
  }
  return best;
}

int next(int m) { return (m + 1) % 3; }
int prev(int m) { return (m + 2) % 3; }

}  // namespace

const MarkedPoint* MarkedSurface::find_point(std::string_view id) const {
  auto it = std::lower_bound(points.begin(), points.end(), id,
                             [](const MarkedPoint& p, std::string_view v) { return p.id < v; });
  return (it != points.end() && it->id == id) ? &*it : nullptr;
}

std::size_t MarkedSurface::puncture_count() const {
  return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [](const auto& p) { return p.is_puncture(); }));
}

bool Triangle::is_self_folded() const {
  return sides[0] == sides[1] || sides[1] == sides[2] || sides[2] == sides[0];
}

const std::string& Triangle::folded_side() const {
  return sides[0] == sides[1] || sides[0] == sides[2] ? sides[0] : sides[1];
}

const std::string& Triangle::enclosing_loop() const {
  const std::string& f = folded_side();
  for (const auto& s : sides) {
    if (s != f) return s;
  }
  return f;
}

Triangulation::Triangulation(MarkedSurface surface, std::vector<Side> sides, std::vector<Triangle> triangles)
    : surface_(std::move(surface)), sides_(std::move(sides)), triangles_(std::move(triangles)) {
  std::sort(surface_.points.begin(), surface_.points.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (auto& s : sides_) {
    if (s.end2 < s.end1) std::swap(s.end1, s.end2);
  }
  std::sort(sides_.begin(), sides_.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (auto& t : triangles_) t.sides = least_rotation3(t.sides);
  std::sort(triangles_.begin(), triangles_.end());
  solve_corners();
}

void Triangulation::solve_corners() {
  corners_.assign(triangles_.size(), {});
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    std::array<const Side*, 3> s{};
    bool declared = true;
    for (int m = 0; m < 3; ++m) {
      s[m] = find_side(triangles_[t].sides[m]);
      declared = declared && s[m] != nullptr;
    }
    if (!declared) continue;  // reported by validation
    // Corner m is an endpoint of sides m and m+1; side m must join corners m-1 and m.
    std::set<std::array<std::string, 3>> solutions;
    std::array<std::string, 3> c;
    const std::array<std::string, 2> ends[3] = {{s[0]->end1, s[0]->end2}, {s[1]->end1, s[1]->end2},
                                                {s[2]->end1, s[2]->end2}};
    for (int i0 = 0; i0 < 2; ++i0) {
      for (int i1 = 0; i1 < 2; ++i1) {
        for (int i2 = 0; i2 < 2; ++i2) {
          c = {ends[1][i0], ends[2][i1], ends[0][i2]};
          bool ok = true;
          for (int m = 0; m < 3 && ok; ++m) {
            std::array<std::string, 2> got = {c[prev(m)], c[m]};
            std::sort(got.begin(), got.end());
            ok = got == ends[m];
          }
          if (ok) solutions.insert(c);
        }
      }
    }
    if (solutions.size() == 1) {
      corners_[t] = *solutions.begin();
    } else if (corner_error_.empty()) {
      const auto& tri = triangles_[t].sides;
      corner_error_ = "triangle (" + tri[0] + "," + tri[1] + "," + tri[2] + "): side endpoints " +
                      (solutions.empty() ? "do not close up into a triangle" : "leave the corners ambiguous");
    }
  }
}

const Side* Triangulation::find_side(std::string_view id) const {
  auto it = std::lower_bound(sides_.begin(), sides_.end(), id, [](const Side& s, std::string_view v) { return s.id < v; });
  return (it != sides_.end() && it->id == id) ? &*it : nullptr;
}

const Side& Triangulation::side(std::string_view id) const {
  const Side* s = find_side(id);
  if (!s) throw PreconditionError("unknown side '" + std::string(id) + "'");
  return *s;
}

std::vector<std::string> Triangulation::arc_ids() const {
  std::vector<std::string> ids;
  for (const auto& s : sides_) {
    if (s.is_arc()) ids.push_back(s.id);
  }
  return ids;
}

std::size_t Triangulation::boundary_segment_count() const {
  return static_cast<std::size_t>(std::count_if(sides_.begin(), sides_.end(), [](const auto& s) { return !s.is_arc(); }));
}

std::vector<Slot> Triangulation::slots_of(std::string_view id) const {
  std::vector<Slot> out;
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    for (int m = 0; m < 3; ++m) {
      if (triangles_[t].sides[m] == id) out.emplace_back(t, m);
    }
  }
  return out;
}

Slot Triangulation::other_slot(Slot s) const {
  const auto slots = slots_of(triangles_[s.first].sides[s.second]);
  if (slots.size() != 2) throw PreconditionError("side '" + triangles_[s.first].sides[s.second] + "' is not an interior arc");
  return slots[0] == s ? slots[1] : slots[0];
}

const std::string& Triangulation::corner(std::size_t t, int m) const {
  if (!corner_error_.empty()) throw PreconditionError(corner_error_);
  return corners_.at(t)[m];
}

int Triangulation::valence(std::string_view point) const {
  int v = 0;
  for (const auto& s : sides_) {
    if (!s.is_arc()) continue;
    v += (s.end1 == point) + (s.end2 == point);
  }
  return v;
}

bool operator==(const Triangulation& a, const Triangulation& b) {
  return triangulation_to_string(a) == triangulation_to_string(b);
}

long long expected_rank(const Triangulation& t) {
  const MarkedSurface& s = t.surface();
  const auto p = static_cast<long long>(s.puncture_count());
  const auto c = static_cast<long long>(s.points.size()) - p;
  return 6LL * s.genus + 3LL * s.boundary_components + 3 * p + c - 6;
}

Diagnostics validate_triangulation(const Triangulation& t) {
  Diagnostics d;
  const MarkedSurface& surf = t.surface();
  const int g = surf.genus;
  const int b = surf.boundary_components;
  if (g < 0 || b < 0) d.fail("genus and boundary count must be nonnegative");

  std::set<std::string> ids;
  std::vector<int> points_on(static_cast<std::size_t>(std::max(b, 0)) + 1, 0);
  for (const auto& p : surf.points) {
    if (!ids.insert(p.id).second) d.fail("duplicate marked point '" + p.id + "'");
    if (p.boundary < 0 || p.boundary > b) {
      d.fail("marked point '" + p.id + "' lies on nonexistent boundary component " + std::to_string(p.boundary));
      continue;
    }
    ++points_on[p.boundary];
    if (p.is_puncture() && p.scalar == 0) d.fail("puncture '" + p.id + "' needs a nonzero scalar");
  }
  for (int k = 1; k <= b; ++k) {
    if (points_on[k] == 0) d.fail("boundary component " + std::to_string(k) + " has no marked point");
  }
  const auto punctures = static_cast<int>(surf.puncture_count());
  const int c = static_cast<int>(surf.points.size()) - punctures;
  if (g == 0 && b == 0 && punctures < 5) d.fail("excluded surface: sphere with fewer than five punctures");
  if (g == 0 && b == 1 && punctures == 0 && c <= 3) d.fail("excluded surface: unpunctured monogon, digon or triangle");
  if (g == 0 && b == 1 && punctures == 1 && c == 1) d.fail("excluded surface: once-punctured monogon");
  if (!d.ok) return d;

  ids.clear();
  for (const auto& s : t.sides()) {
    if (!ids.insert(s.id).second) d.fail("duplicate side '" + s.id + "'");
    const MarkedPoint* p1 = surf.find_point(s.end1);
    const MarkedPoint* p2 = surf.find_point(s.end2);
    if (!p1 || !p2) {
      d.fail("side '" + s.id + "' has an undeclared endpoint");
      continue;
    }
    if (!s.is_arc() && (p1->boundary != s.on || p2->boundary != s.on || s.on == 0)) {
      d.fail("boundary segment '" + s.id + "' must join marked points of boundary component " + std::to_string(s.on));
    }
  }

  // Boundary segments on each component form one circle through its marked points.
  for (int k = 1; k <= b; ++k) {
    std::map<std::string, std::vector<std::string>> adj;
    int segments = 0;
    for (const auto& s : t.sides()) {
      if (s.is_arc() || s.on != k) continue;
      ++segments;
      adj[s.end1].push_back(s.end2);
      adj[s.end2].push_back(s.end1);
    }
    bool circle = segments == points_on[k] && static_cast<int>(adj.size()) == points_on[k];
    for (const auto& [v, nbrs] : adj) circle = circle && nbrs.size() == 2;
    if (circle && !adj.empty()) {
      std::set<std::string> seen = {adj.begin()->first};
      std::vector<std::string> stack = {adj.begin()->first};
      while (!stack.empty()) {
        const std::string v = stack.back();
        stack.pop_back();
        for (const auto& w : adj[v]) {
          if (seen.insert(w).second) stack.push_back(w);
        }
      }
      circle = seen.size() == adj.size();
    }
    if (!circle) d.fail("boundary segments on component " + std::to_string(k) + " do not partition the boundary circle");
  }

  std::map<std::string, int> slot_count;
  for (const auto& tri : t.triangles()) {
    for (const auto& s : tri.sides) ++slot_count[s];
    const std::string label = "(" + tri.sides[0] + "," + tri.sides[1] + "," + tri.sides[2] + ")";
    for (const auto& s : tri.sides) {
      if (!t.find_side(s)) d.fail("triangle " + label + " uses undeclared side '" + s + "'");
    }
    if (tri.sides[0] == tri.sides[1] && tri.sides[1] == tri.sides[2]) {
      d.fail("triangle " + label + " repeats one side three times");
    }
  }
  for (const auto& s : t.sides()) {
    const int expected = s.is_arc() ? 2 : 1;
    const int got = slot_count.count(s.id) ? slot_count[s.id] : 0;
    if (got != expected) {
      d.fail(std::string(s.is_arc() ? "arc '" : "boundary segment '") + s.id + "' occurs in " + std::to_string(got) +
             " triangle slots, expected " + std::to_string(expected));
    }
  }
  if (!d.ok) return d;

  for (const auto& tri : t.triangles()) {
    if (!tri.is_self_folded()) continue;
    const Side& f = t.side(tri.folded_side());
    const Side& l = t.side(tri.enclosing_loop());
    const std::string label = "self-folded triangle (" + tri.sides[0] + "," + tri.sides[1] + "," + tri.sides[2] + ")";
    if (!f.is_arc() || !l.is_arc()) {
      d.fail(label + " must consist of arcs");
      continue;
    }
    if (!l.is_loop()) {
      d.fail(label + ": enclosing side '" + l.id + "' is not a loop");
      continue;
    }
    const std::string& base = l.end1;
    const std::string& inner = f.end1 == base ? f.end2 : f.end1;
    const MarkedPoint* p = surf.find_point(inner);
    if (f.is_loop() || (f.end1 != base && f.end2 != base) || !p || !p->is_puncture()) {
      d.fail(label + ": folded side must join the loop's basepoint to a puncture");
    } else if (t.valence(inner) != 1) {
      d.fail(label + ": enclosed puncture '" + inner + "' must have valence 1");
    }
  }

  const auto arcs = static_cast<long long>(t.arc_ids().size());
  if (arcs != expected_rank(t)) {
    d.fail("rank mismatch: " + std::to_string(arcs) + " arcs, expected 6g+3b+3p+c-6 = " + std::to_string(expected_rank(t)));
  }
  const long long euler = static_cast<long long>(t.triangles().size()) -
                          (arcs + static_cast<long long>(t.boundary_segment_count())) +
                          static_cast<long long>(surf.points.size());
  if (euler != 2 - 2LL * g - b) {
    d.fail("Euler characteristic " + std::to_string(euler) + " does not match 2-2g-b = " + std::to_string(2 - 2 * g - b));
  }

  // Connectivity through shared sides.
  const std::size_t n = t.triangles().size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& s : t.sides()) {
    const auto slots = t.slots_of(s.id);
    if (slots.size() == 2) parent[find(slots[0].first)] = find(slots[1].first);
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (find(i) != find(0)) {
      d.fail("triangles do not form a connected surface");
      break;
    }
  }
  if (!d.ok) return d;

  try {
    for (const auto& s : t.sides()) {
      const auto slots = t.slots_of(s.id);
      if (slots.size() != 2) continue;
      const auto [t1, m1] = slots[0];
      const auto [t2, m2] = slots[1];
      if (t.corner(t1, prev(m1)) != t.corner(t2, m2) || t.corner(t1, m1) != t.corner(t2, prev(m2))) {
        d.fail("arc '" + s.id + "' is traversed in the same direction by both of its triangles (orientation)");
      }
    }
  } catch (const PreconditionError& e) {
    d.fail(e.what());
  }
  return d;
}

void require_valid(const Triangulation& t) {
  const Diagnostics d = validate_triangulation(t);
  if (!d.ok) throw PreconditionError("invalid triangulation: " + d.messages.front());
}

std::map<std::string, std::string> fold_map(const Triangulation& t) {
  std::map<std::string, std::string> pi;
  for (const auto& s : t.sides()) pi[s.id] = s.id;
  for (const auto& tri : t.triangles()) {
    if (tri.is_self_folded()) pi[tri.folded_side()] = tri.enclosing_loop();
  }
  return pi;
}

std::vector<Contribution> arrow_contributions(const Triangulation& t) {
  // Preimages under the fold map: a loop also stands for the folded side it encloses.
  std::map<std::string, std::vector<std::string>> preimage;
  for (const auto& s : t.sides()) {
    if (s.is_arc()) preimage[s.id] = {s.id};
  }
  for (const auto& tri : t.triangles()) {
    if (tri.is_self_folded()) preimage[tri.enclosing_loop()].push_back(tri.folded_side());
  }
  for (auto& [id, pre] : preimage) std::sort(pre.begin(), pre.end());

  std::vector<Contribution> out;
  for (std::size_t ti = 0; ti < t.triangles().size(); ++ti) {
    const Triangle& tri = t.triangles()[ti];
    if (tri.is_self_folded()) continue;
    for (int m = 0; m < 3; ++m) {
      const auto from = preimage.find(tri.sides[m]);
      const auto to = preimage.find(tri.sides[next(m)]);
      if (from == preimage.end() || to == preimage.end()) continue;  // boundary segment
      for (const auto& i : from->second) {
        for (const auto& j : to->second) out.push_back({ti, m, i, j});
      }
    }
  }
  return out;
}

IntegerMatrix signed_adjacency(const Triangulation& t) {
  require_valid(t);
  IntegerMatrix b(t.arc_ids());
  const auto& ids = b.ids();
  auto index = [&](const std::string& id) {
    return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  for (const auto& c : arrow_contributions(t)) {
    b.at(index(c.from), index(c.to)) += 1;
    b.at(index(c.to), index(c.from)) -= 1;
  }
  return b;
}

std::optional<std::size_t> UnreducedQuiver::corner_arrow(std::size_t triangle, int corner, std::string_view from,
                                                         std::string_view to) const {
  for (std::size_t a = 0; a < quiver.arrow_count(); ++a) {
    const ArrowProvenance& p = provenance[a];
    const Arrow& arr = quiver.arrow(a);
    if (p.kind == ArrowProvenance::Kind::corner && p.triangle == triangle && p.corner == corner &&
        quiver.vertex(arr.tail) == from && quiver.vertex(arr.head) == to) {
      return a;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> UnreducedQuiver::puncture_arrow(std::string_view from, std::string_view to) const {
  for (std::size_t a = 0; a < quiver.arrow_count(); ++a) {
    const Arrow& arr = quiver.arrow(a);
    if (provenance[a].kind == ArrowProvenance::Kind::puncture && quiver.vertex(arr.tail) == from &&
        quiver.vertex(arr.head) == to) {
      return a;
    }
  }
  return std::nullopt;
}

UnreducedQuiver unreduced_quiver(const Triangulation& t) {
  require_valid(t);
  const std::vector<Contribution> all = arrow_contributions(t);

  // Cancel opposite contributions on each unordered pair, earliest first.
  std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> by_pair;
  for (std::size_t i = 0; i < all.size(); ++i) by_pair[{all[i].from, all[i].to}].push_back(i);
  std::vector<bool> alive(all.size(), true);
  for (auto& [key, forward] : by_pair) {
    if (key.first > key.second) continue;
    auto it = by_pair.find({key.second, key.first});
    if (it == by_pair.end()) continue;
    const std::size_t n = std::min(forward.size(), it->second.size());
    for (std::size_t k = 0; k < n; ++k) {
      alive[forward[k]] = false;
      alive[it->second[k]] = false;
    }
  }

  std::vector<ArrowSpec> specs;
  std::vector<std::pair<std::string, ArrowProvenance>> prov;
  std::map<std::pair<std::string, std::string>, int> counter;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!alive[i]) continue;
    const Contribution& c = all[i];
    const int k = ++counter[{c.from, c.to}];
    std::string id = c.from + ">" + c.to + "#" + std::to_string(k);
    specs.push_back({id, c.from, c.to});
    prov.emplace_back(id, ArrowProvenance{ArrowProvenance::Kind::corner, c.triangle, c.corner, {}});
  }
  for (const auto& p : t.surface().points) {
    if (!p.is_puncture() || t.valence(p.id) != 2) continue;
    std::vector<std::string> incident;
    for (const auto& s : t.sides()) {
      if (s.is_arc() && (s.end1 == p.id || s.end2 == p.id) && !s.is_loop()) incident.push_back(s.id);
    }
    if (incident.size() != 2) continue;
    for (int dir = 0; dir < 2; ++dir) {
      const std::string& from = incident[dir];
      const std::string& to = incident[1 - dir];
      std::string id = from + ">" + to + "@" + p.id;
      specs.push_back({id, from, to});
      prov.emplace_back(id, ArrowProvenance{ArrowProvenance::Kind::puncture, 0, 0, p.id});
    }
  }

  UnreducedQuiver out{Quiver(t.arc_ids(), std::move(specs)), {}};
  std::sort(prov.begin(), prov.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [id, pv] : prov) out.provenance.push_back(std::move(pv));
  return out;
}

std::vector<std::string> flippable_arcs(const Triangulation& t) {
  std::set<std::string> folded;
  for (const auto& tri : t.triangles()) {
    if (tri.is_self_folded()) folded.insert(tri.folded_side());
  }
  std::vector<std::string> out;
  for (const auto& id : t.arc_ids()) {
    if (!folded.count(id)) out.push_back(id);
  }
  return out;
}

FlipResult flip(const Triangulation& t, std::string_view arc) {
  require_valid(t);
  const Side& old = t.side(arc);
  if (!old.is_arc()) throw PreconditionError("cannot flip boundary segment '" + old.id + "'");
  const auto slots = t.slots_of(arc);
  if (slots[0].first == slots[1].first) {
    throw PreconditionError("flip undefined: '" + old.id + "' is the folded side of a self-folded triangle");
  }

  std::string fresh = old.id + "'";
  while (t.find_side(fresh)) fresh += "'";

  auto rotated = [&](Slot s) {
    const auto& sides = t.triangles()[s.first].sides;
    return std::array<std::string, 3>{sides[s.second], sides[next(s.second)], sides[prev(s.second)]};
  };
  const auto d1 = rotated(slots[0]);  // (i, x, y)
  const auto d2 = rotated(slots[1]);  // (i, u, v)
  const std::string& p1 = t.corner(slots[0].first, next(slots[0].second));
  const std::string& p2 = t.corner(slots[1].first, next(slots[1].second));

  std::vector<Triangle> triangles;
  for (std::size_t i = 0; i < t.triangles().size(); ++i) {
    if (i != slots[0].first && i != slots[1].first) triangles.push_back(t.triangles()[i]);
  }
  triangles.push_back({{fresh, d1[2], d2[1]}});
  triangles.push_back({{fresh, d2[2], d1[1]}});

  std::vector<Side> sides;
  for (const auto& s : t.sides()) {
    if (s.id != old.id) sides.push_back(s);
  }
  sides.push_back({fresh, SideKind::arc, p1, p2, 0});

  FlipResult result{Triangulation(t.surface(), std::move(sides), std::move(triangles)), old.id, fresh, {}};
  for (const auto& id : t.arc_ids()) result.relabel.emplace_back(id, id == old.id ? fresh : id);

  const Diagnostics d = validate_triangulation(result.triangulation);
  if (!d.ok) throw std::logic_error("flip of '" + old.id + "' produced an invalid triangulation: " + d.messages.front());
  const IntegerMatrix expected = mutate_matrix(signed_adjacency(t), old.id).relabeled({{old.id, fresh}});
  if (!same_labelled_matrix(expected, signed_adjacency(result.triangulation))) {
    throw std::logic_error("flip of '" + old.id + "' disagrees with matrix mutation");
  }
  return result;
}

void write_triangulation(std::ostream& out, const Triangulation& t) {
  const MarkedSurface& s = t.surface();
  out << "surface genus=" << s.genus << " boundary=" << s.boundary_components << '\n';
  for (const auto& p : s.points) {
    if (p.is_puncture()) {
      out << "marked " << p.id << " puncture scalar=" << format_rational(p.scalar) << '\n';
    } else {
      out << "marked " << p.id << " boundary=" << p.boundary << '\n';
    }
  }
  for (const auto& side : t.sides()) {
    if (!side.is_arc()) out << "bseg " << side.id << ' ' << side.end1 << ' ' << side.end2 << " on=" << side.on << '\n';
  }
  for (const auto& side : t.sides()) {
    if (side.is_arc()) out << "arc " << side.id << ' ' << side.end1 << ' ' << side.end2 << '\n';
  }
  for (const auto& tri : t.triangles()) {
    out << "tri " << tri.sides[0] << ' ' << tri.sides[1] << ' ' << tri.sides[2] << '\n';
  }
}

std::string triangulation_to_string(const Triangulation& t) {
  std::ostringstream os;
  write_triangulation(os, t);
  return os.str();
}

namespace {

int parse_int(const std::string& text, std::size_t line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) {
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" + text + "'");
  }
  return v;
}

std::string require_key(const std::string& token, std::string_view key, std::size_t line) {
  std::string value;
  if (!detail::split_key_value(token, key, value)) {
    throw ParseError("line " + std::to_string(line) + ": expected '" + std::string(key) + "=...', got '" + token + "'");
  }
  return value;
}

// First `count` primes: default puncture scalars.
std::vector<long> first_primes(std::size_t count) {
  std::vector<long> primes;
  for (long n = 2; primes.size() < count; ++n) {
    if (std::all_of(primes.begin(), primes.end(), [&](long p) { return n % p != 0; })) primes.push_back(n);
  }
  return primes;
}

}  // namespace

Triangulation parse_triangulation(std::string_view text) {
  MarkedSurface surface;
  bool have_header = false;
  std::vector<Side> sides;
  std::vector<Triangle> triangles;
  std::set<std::string> unscaled;
  for (const auto& line : detail::content_lines(text)) {
    const auto tok = detail::tokenize(line.text);
    const std::size_t n = line.number;
    auto arity = [&](std::size_t k) {
      if (tok.size() != k) {
        throw ParseError("line " + std::to_string(n) + ": '" + tok[0] + "' expects " + std::to_string(k - 1) + " fields");
      }
    };
    if (tok[0] == "surface") {
      arity(3);
      if (have_header) throw ParseError("line " + std::to_string(n) + ": duplicate surface line");
      have_header = true;
      surface.genus = parse_int(require_key(tok[1], "genus", n), n);
      surface.boundary_components = parse_int(require_key(tok[2], "boundary", n), n);
    } else if (tok[0] == "marked") {
      if (tok.size() < 3) throw ParseError("line " + std::to_string(n) + ": 'marked' needs an id and a location");
      MarkedPoint p{tok[1], 0, 0};
      std::string value;
      if (tok[2] == "puncture") {
        if (tok.size() == 4) {
          p.scalar = parse_rational(require_key(tok[3], "scalar", n));
        } else if (tok.size() == 3) {
          unscaled.insert(p.id);
        } else {
          throw ParseError("line " + std::to_string(n) + ": expected 'marked <id> puncture [scalar=<q>]'");
        }
      } else {
        arity(3);
        p.boundary = parse_int(require_key(tok[2], "boundary", n), n);
        if (p.boundary < 1) throw ParseError("line " + std::to_string(n) + ": boundary components are numbered from 1");
      }
      surface.points.push_back(std::move(p));
    } else if (tok[0] == "bseg") {
      arity(5);
      sides.push_back({tok[1], SideKind::boundary, tok[2], tok[3], parse_int(require_key(tok[4], "on", n), n)});
    } else if (tok[0] == "arc") {
      arity(4);
      sides.push_back({tok[1], SideKind::arc, tok[2], tok[3], 0});
    } else if (tok[0] == "tri") {
      arity(4);
      triangles.push_back({{tok[1], tok[2], tok[3]}});
    } else {
      throw ParseError("line " + std::to_string(n) + ": unknown keyword '" + tok[0] + "'");
    }
  }
  if (!have_header) throw ParseError("missing 'surface genus=<g> boundary=<b>' line");

  // Unspecified scalars default to the k-th prime for the k-th puncture in id order.
  std::sort(surface.points.begin(), surface.points.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  const auto primes = first_primes(surface.puncture_count());
  std::size_t k = 0;
  for (auto& p : surface.points) {
    if (!p.is_puncture()) continue;
    if (unscaled.count(p.id)) p.scalar = primes[k];
    ++k;
  }
  return Triangulation(std::move(surface), std::move(sides), std::move(triangles));
}

}  // namespace qpsurf
