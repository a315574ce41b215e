#include "qpsurf/quiver.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "qpsurf/detail/text.hpp"
#include "qpsurf/error.hpp"

namespace qpsurf {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows) : vertices_(std::move(vertices)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].empty()) throw PreconditionError("empty vertex id");
    if (!vertex_lookup_.emplace(vertices_[i], i).second) {
      throw PreconditionError("duplicate vertex id '" + vertices_[i] + "'");
    }
  }
  std::sort(arrows.begin(), arrows.end(), [](const ArrowSpec& a, const ArrowSpec& b) { return a.id < b.id; });
  arrows_.reserve(arrows.size());
  for (auto& spec : arrows) {
    if (spec.id.empty()) throw PreconditionError("empty arrow id");
    const std::size_t t = vertex_index(spec.tail);
    const std::size_t h = vertex_index(spec.head);
    if (t == h) throw PreconditionError("arrow '" + spec.id + "' is a loop at '" + spec.tail + "'");
    if (!arrow_lookup_.emplace(spec.id, arrows_.size()).second) {
      throw PreconditionError("duplicate arrow id '" + spec.id + "'");
    }
    arrows_.push_back({std::move(spec.id), t, h});
  }
}

std::optional<std::size_t> Quiver::find_vertex(std::string_view id) const {
  auto it = vertex_lookup_.find(std::string(id));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Quiver::find_arrow(std::string_view id) const {
  auto it = arrow_lookup_.find(std::string(id));
  if (it == arrow_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t Quiver::vertex_index(std::string_view id) const {
  if (auto i = find_vertex(id)) return *i;
  throw PreconditionError("unknown vertex '" + std::string(id) + "'");
}

std::size_t Quiver::arrow_index(std::string_view id) const {
  if (auto i = find_arrow(id)) return *i;
  throw PreconditionError("unknown arrow '" + std::string(id) + "'");
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
  return a.arrows_ == b.arrows_;
}

std::vector<ArrowSpec> Quiver::arrow_specs() const {
  std::vector<ArrowSpec> out;
  out.reserve(arrows_.size());
  for (const auto& a : arrows_) out.push_back({a.id, vertices_[a.tail], vertices_[a.head]});
  return out;
}

// ---------------------------------------------------------------------------

IntegerMatrix::IntegerMatrix(std::vector<std::string> ids) : ids_(std::move(ids)), data_(ids_.size() * ids_.size(), 0) {}

IntegerMatrix::IntegerMatrix(std::vector<std::string> ids, std::vector<std::vector<long long>> rows)
    : IntegerMatrix(std::move(ids)) {
  if (rows.size() != ids_.size()) throw PreconditionError("matrix row count does not match label count");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ids_.size()) throw PreconditionError("matrix is not square");
    for (std::size_t j = 0; j < rows[i].size(); ++j) at(i, j) = rows[i][j];
  }
}

long long IntegerMatrix::at(std::string_view i, std::string_view j) const {
  auto pos = [&](std::string_view id) {
    auto it = std::find(ids_.begin(), ids_.end(), id);
    if (it == ids_.end()) throw PreconditionError("unknown matrix label '" + std::string(id) + "'");
    return static_cast<std::size_t>(it - ids_.begin());
  };
  return at(pos(i), pos(j));
}

bool IntegerMatrix::is_skew_symmetric() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i; j < size(); ++j) {
      if (at(i, j) != -at(j, i)) return false;
    }
  }
  return true;
}

long long IntegerMatrix::max_abs_entry() const {
  long long m = 0;
  for (long long v : data_) m = std::max(m, v < 0 ? -v : v);
  return m;
}

IntegerMatrix IntegerMatrix::reordered(const std::vector<std::string>& order) const {
  if (order.size() != size()) throw PreconditionError("reorder: label count mismatch");
  std::vector<std::size_t> src(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto it = std::find(ids_.begin(), ids_.end(), order[i]);
    if (it == ids_.end()) throw PreconditionError("reorder: unknown label '" + order[i] + "'");
    src[i] = static_cast<std::size_t>(it - ids_.begin());
  }
  IntegerMatrix out(order);
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) out.at(i, j) = at(src[i], src[j]);
  }
  return out;
}

IntegerMatrix IntegerMatrix::relabeled(const std::vector<std::pair<std::string, std::string>>& renames) const {
  IntegerMatrix out = *this;
  for (auto& id : out.ids_) {
    for (const auto& [from, to] : renames) {
      if (id == from) {
        id = to;
        break;
      }
    }
  }
  return out;
}

bool same_labelled_matrix(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::string> sa = a.ids();
  std::vector<std::string> sb = b.ids();
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  return a.reordered(sa) == b.reordered(sa);
}

// ---------------------------------------------------------------------------

Quiver quiver_from_matrix(const IntegerMatrix& b) {
  if (!b.is_skew_symmetric()) throw PreconditionError("matrix is not skew-symmetric");
  std::vector<ArrowSpec> arrows;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      for (long long k = 1; k <= b.at(i, j); ++k) {
        arrows.push_back({b.ids()[i] + ">" + b.ids()[j] + "#" + std::to_string(k), b.ids()[i], b.ids()[j]});
      }
    }
  }
  return Quiver(b.ids(), std::move(arrows));
}

IntegerMatrix net_arrow_matrix(const Quiver& q) {
  IntegerMatrix m(q.vertices());
  for (const auto& a : q.arrows()) {
    ++m.at(a.tail, a.head);
    --m.at(a.head, a.tail);
  }
  return m;
}

IntegerMatrix arrow_multiplicities(const Quiver& q) {
  IntegerMatrix m(q.vertices());
  for (const auto& a : q.arrows()) ++m.at(a.tail, a.head);
  return m;
}

bool is_two_acyclic(const Quiver& q) {
  const IntegerMatrix m = arrow_multiplicities(q);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m.at(i, j) > 0 && m.at(j, i) > 0) return false;
    }
  }
  return true;
}

IntegerMatrix matrix_from_quiver(const Quiver& q) {
  if (!is_two_acyclic(q)) throw PreconditionError("quiver has a 2-cycle; its exchange matrix is undefined");
  return net_arrow_matrix(q);
}

bool has_two_cycle_at(const Quiver& q, std::size_t k) {
  std::set<std::size_t> out;
  std::set<std::size_t> in;
  for (const auto& a : q.arrows()) {
    if (a.tail == k) out.insert(a.head);
    if (a.head == k) in.insert(a.tail);
  }
  return std::any_of(out.begin(), out.end(), [&](std::size_t v) { return in.count(v) > 0; });
}

std::string reversed_arrow_name(std::string_view a) { return std::string(a) + "*"; }

std::string hook_arrow_name(std::string_view a, std::string_view b) {
  return "[" + std::string(a) + "." + std::string(b) + "]";
}

Quiver premutate_quiver(const Quiver& q, std::string_view k_id) {
  const std::size_t k = q.vertex_index(k_id);
  if (has_two_cycle_at(q, k)) throw PreconditionError("quiver has a 2-cycle at vertex '" + std::string(k_id) + "'");
  std::vector<ArrowSpec> arrows;
  std::vector<const Arrow*> outgoing;  // a with t(a) = k
  std::vector<const Arrow*> incoming;  // b with h(b) = k
  for (const auto& a : q.arrows()) {
    const std::string& t = q.vertex(a.tail);
    const std::string& h = q.vertex(a.head);
    if (a.tail == k) {
      outgoing.push_back(&a);
      arrows.push_back({reversed_arrow_name(a.id), h, t});
    } else if (a.head == k) {
      incoming.push_back(&a);
      arrows.push_back({reversed_arrow_name(a.id), h, t});
    } else {
      arrows.push_back({a.id, t, h});
    }
  }
  for (const Arrow* a : outgoing) {
    for (const Arrow* b : incoming) {
      arrows.push_back({hook_arrow_name(a->id, b->id), q.vertex(b->tail), q.vertex(a->head)});
    }
  }
  return Quiver(q.vertices(), std::move(arrows));
}

Quiver remove_two_cycles(const Quiver& q) {
  // Arrows are sorted by id, so per-pair buckets are already in id order.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < q.arrow_count(); ++i) buckets[{q.arrow(i).tail, q.arrow(i).head}].push_back(i);
  std::vector<bool> removed(q.arrow_count(), false);
  for (const auto& [key, forward] : buckets) {
    if (key.first > key.second) continue;
    auto it = buckets.find({key.second, key.first});
    if (it == buckets.end()) continue;
    const std::size_t pairs = std::min(forward.size(), it->second.size());
    for (std::size_t p = 0; p < pairs; ++p) {
      removed[forward[p]] = true;
      removed[it->second[p]] = true;
    }
  }
  std::vector<ArrowSpec> kept;
  for (std::size_t i = 0; i < q.arrow_count(); ++i) {
    if (!removed[i]) kept.push_back({q.arrow(i).id, q.vertex(q.arrow(i).tail), q.vertex(q.arrow(i).head)});
  }
  return Quiver(q.vertices(), std::move(kept));
}

Quiver mutate_quiver(const Quiver& q, std::string_view k) { return remove_two_cycles(premutate_quiver(q, k)); }

IntegerMatrix mutate_matrix(const IntegerMatrix& b, std::string_view k_id) {
  if (!b.is_skew_symmetric()) throw PreconditionError("matrix is not skew-symmetric");
  auto it = std::find(b.ids().begin(), b.ids().end(), k_id);
  if (it == b.ids().end()) throw PreconditionError("unknown matrix label '" + std::string(k_id) + "'");
  const auto k = static_cast<std::size_t>(it - b.ids().begin());
  IntegerMatrix out = b;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (i == k || j == k) {
        out.at(i, j) = -b.at(i, j);
      } else {
        const long long bik = b.at(i, k);
        const long long bkj = b.at(k, j);
        // b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2
        out.at(i, j) = b.at(i, j) + ((bik < 0 ? -bik : bik) * bkj + bik * (bkj < 0 ? -bkj : bkj)) / 2;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

void write_quiver(std::ostream& out, const Quiver& q) {
  for (const auto& v : q.vertices()) out << "v " << v << '\n';
  for (const auto& a : q.arrows()) out << "a " << a.id << ' ' << q.vertex(a.tail) << ' ' << q.vertex(a.head) << '\n';
}

Quiver parse_quiver(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<ArrowSpec> arrows;
  for (const auto& line : detail::content_lines(text)) {
    const auto tok = detail::tokenize(line.text);
    if (tok[0] == "v" && tok.size() == 2) {
      vertices.push_back(tok[1]);
    } else if (tok[0] == "a" && tok.size() == 4) {
      arrows.push_back({tok[1], tok[2], tok[3]});
    } else {
      throw ParseError("quiver line " + std::to_string(line.number) + ": expected 'v <id>' or 'a <id> <tail> <head>'");
    }
  }
  try {
    return Quiver(std::move(vertices), std::move(arrows));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid quiver: ") + e.what());
  }
}

void write_matrix(std::ostream& out, const IntegerMatrix& m, bool with_header) {
  if (with_header) {
    out << "#";
    for (const auto& id : m.ids()) out << ' ' << id;
    out << '\n';
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out << (j ? " " : "") << m.at(i, j);
    out << '\n';
  }
}

IntegerMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<long long>> rows;
  for (const auto& line : detail::content_lines(text)) {
    std::vector<long long> row;
    for (const auto& tok : detail::tokenize(line.text)) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError("matrix line " + std::to_string(line.number) + ": bad integer '" + tok + "'");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::string> ids;
  for (std::size_t i = 1; i <= rows.size(); ++i) ids.push_back(std::to_string(i));
  try {
    return IntegerMatrix(std::move(ids), std::move(rows));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace qpsurf
