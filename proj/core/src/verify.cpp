#include "qpsurf/verify.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include "qpsurf/detail/text.hpp"
#include "qpsurf/error.hpp"
#include "qpsurf/jacobian.hpp"

namespace qpsurf {

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string matrix_text(const IntegerMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

/// Compares dims at orders 1..order and records them.
void compare_dims(CheckReport& r, const QP& left, const QP& right, int order, const std::string& what) {
  const auto dl = truncated_quotient_dim(left, order).dims_up_to(order);
  const auto dr = truncated_quotient_dim(right, order).dims_up_to(order);
  r.add("truncated Jacobian dimensions (" + what + ")", dl == dr, "orders 1.." + std::to_string(order) + ": " + join(dl) +
                                                                      " vs " + join(dr));
}

void compare_multiplicities(CheckReport& r, const Quiver& left, const Quiver& right, const std::string& what) {
  const IntegerMatrix ml = arrow_multiplicities(left);
  const IntegerMatrix mr = arrow_multiplicities(right);
  r.add("arrow multiplicities (" + what + ")", same_labelled_matrix(ml, mr),
        same_labelled_matrix(ml, mr) ? std::string() : "left:\n" + matrix_text(ml) + "right:\n" + matrix_text(mr));
}

/// Potentials equal after matching arrows positionally inside each class of
/// parallel arrows (same tail and head, ids in increasing order).
bool equal_under_parallel_matching(const QP& a, const QP& b) {
  const Quiver& qa = a.quiver();
  const Quiver& qb = b.quiver();
  if (qa.vertices() != qb.vertices() || qa.arrow_count() != qb.arrow_count()) return false;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::uint32_t>> ca, cb;
  for (std::uint32_t i = 0; i < qa.arrow_count(); ++i) ca[{qa.arrow(i).tail, qa.arrow(i).head}].push_back(i);
  for (std::uint32_t i = 0; i < qb.arrow_count(); ++i) cb[{qb.arrow(i).tail, qb.arrow(i).head}].push_back(i);
  if (ca.size() != cb.size()) return false;
  std::vector<std::uint32_t> map(qa.arrow_count());
  for (const auto& [key, list] : ca) {
    auto it = cb.find(key);
    if (it == cb.end() || it->second.size() != list.size()) return false;
    for (std::size_t k = 0; k < list.size(); ++k) map[list[k]] = it->second[k];
  }
  AlgebraElement moved(b.quiver_ptr(), b.order());
  for (const auto& [p, c] : a.potential().element().terms()) {
    Path r;
    for (auto x : p.arrows) r.arrows.push_back(map[x]);
    r.vertex = static_cast<std::uint32_t>(qb.arrow(r.arrows.front()).head);
    moved.add_term(r, c);
  }
  const int o = std::min(a.order(), b.order());
  return cyclic_normal_form(moved.with_order(o)) == cyclic_normal_form(b.potential().element().with_order(o));
}

std::string canonical_small(const IntegerMatrix& b) {
  const std::size_t n = b.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<long long> best;
  do {
    std::vector<long long> cur;
    cur.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) cur.push_back(b.at(perm[i], perm[j]));
    }
    if (best.empty() || cur < best) best = std::move(cur);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s += (j ? " " : "") + std::to_string(best.empty() ? 0 : best[i * n + j]);
    s += '\n';
  }
  return s;
}

}  // namespace

void CheckReport::add(std::string sub, bool ok, std::string detail) {
  results.push_back({std::move(sub), ok, std::move(detail), false});
  pass = pass && ok;
}

void CheckReport::note(std::string sub, bool ok, std::string detail) {
  results.push_back({std::move(sub), ok, std::move(detail), true});
}

const SubResult* CheckReport::first_failure() const {
  for (const auto& r : results) {
    if (!r.pass && !r.informational) return &r;
  }
  return nullptr;
}

int working_order(int order) { return 2 * order + 2; }

std::string digest(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = hex[h & 0xF];
  return out;
}

QP with_vertex_order(const QP& q, const std::vector<std::string>& order) {
  QuiverPtr target = share(Quiver(order, q.quiver().arrow_specs()));
  if (target->vertex_count() != q.quiver().vertex_count()) throw PreconditionError("vertex order is not a permutation");
  return QP(Potential(transport_element(q.potential().element(), target)));
}

Substitution parse_substitution(std::string_view text, const QuiverPtr& base, const QuiverPtr& target, int order) {
  std::vector<std::vector<std::string>> lines(base->arrow_count());
  std::vector<bool> listed(base->arrow_count(), false);
  for (const auto& line : detail::content_lines(text)) {
    const auto tok = detail::tokenize(line.text);
    auto a = base->find_arrow(tok[0]);
    if (!a) throw ParseError("witness line " + std::to_string(line.number) + ": unknown arrow '" + tok[0] + "'");
    listed[*a] = true;
    std::string rest;
    for (std::size_t i = 1; i < tok.size(); ++i) rest += (i > 1 ? " " : "") + tok[i];
    lines[*a].push_back(rest);
  }
  std::vector<AlgebraElement> images;
  for (std::size_t a = 0; a < base->arrow_count(); ++a) {
    if (listed[a]) {
      images.push_back(parse_element_lines(lines[a], target, order));
    } else {
      images.push_back(AlgebraElement::arrow(target, order, base->arrow(a).id));
    }
  }
  return Substitution(base, target, order, std::move(images));
}

CheckReport check_flip_compatibility(const Triangulation& t, std::string_view arc, int order,
                                     const std::optional<std::string>& witness_text) {
  CheckReport r;
  r.name = "flip-compat " + std::string(arc);
  r.inputs_digest = digest(triangulation_to_string(t) + "|" + std::string(arc) + "|" + std::to_string(order));
  const FlipResult f = flip(t, arc);  // throws for unflippable arcs
  const int w = working_order(order);

  const IntegerMatrix b_sigma = signed_adjacency(f.triangulation);
  const IntegerMatrix mutated = mutate_matrix(signed_adjacency(t), f.old_arc).relabeled(f.relabel);
  r.add("exchange matrix of the flip equals the mutated matrix", same_labelled_matrix(mutated, b_sigma),
        "B(sigma):\n" + matrix_text(b_sigma));

  const QP left = with_vertex_order(rename_vertices(mutate_qp(qp_of_triangulation(t, w), f.old_arc), f.relabel),
                                    f.triangulation.arc_ids());
  const QP right = qp_of_triangulation(f.triangulation, w);
  r.add("signed adjacency of the mutated QP", same_labelled_matrix(net_arrow_matrix(left.quiver()), b_sigma));
  compare_multiplicities(r, left.quiver(), right.quiver(), "mutated vs flipped");
  compare_dims(r, left, right, order, "mutated vs flipped");
  r.note("potentials equal under positional matching of parallel arrows", equal_under_parallel_matching(left, right));

  if (witness_text) {
    const Substitution phi = parse_substitution(*witness_text, left.quiver_ptr(), right.quiver_ptr(), w);
    r.add("witness is an algebra isomorphism", substitution_is_isomorphism(phi));
    const Potential moved = cyclic_normal_form(phi.apply(left.potential()));
    const int o = std::min(order + 1, w);
    r.add("witness carries the mutated potential to the flipped one",
          moved.element().with_order(o) == cyclic_normal_form(right.potential()).element().with_order(o),
          "compared up to degree " + std::to_string(o));
  }
  return r;
}

CheckReport check_involution(const QP& q, std::string_view k, int order) {
  CheckReport r;
  r.name = "involution " + std::string(k);
  r.inputs_digest = digest(qp_to_string(q) + "|" + std::string(k) + "|" + std::to_string(order));
  const QP base = with_order(q, std::max(working_order(order), q.order()));
  const QP twice = mutate_qp(mutate_qp(base, k), k);
  r.add("quiver matrix restored", same_labelled_matrix(net_arrow_matrix(twice.quiver()), net_arrow_matrix(q.quiver())));
  compare_multiplicities(r, twice.quiver(), q.quiver(), "twice mutated vs input");
  compare_dims(r, twice, base, order, "twice mutated vs input");
  return r;
}

CheckReport check_restriction_commutes(const QP& q, const std::vector<std::string>& keep, std::string_view k,
                                       int order) {
  CheckReport r;
  std::string joined;
  for (const auto& v : keep) joined += (joined.empty() ? "" : ",") + v;
  r.name = "restriction {" + joined + "} at " + std::string(k);
  r.inputs_digest = digest(qp_to_string(q) + "|" + joined + "|" + std::string(k) + "|" + std::to_string(order));
  if (std::find(keep.begin(), keep.end(), std::string(k)) == keep.end()) {
    throw PreconditionError("mutation vertex '" + std::string(k) + "' is not in the kept set");
  }
  const QP base = with_order(q, std::max(working_order(order), q.order()));

  const QP pre_left = premutate_qp(restrict_qp(base, keep), k);
  const QP pre_right = restrict_qp(premutate_qp(base, k), keep);
  const bool same_pre = pre_left.quiver() == pre_right.quiver() &&
                        cyclic_normal_form(pre_left.potential()) == cyclic_normal_form(pre_right.potential());
  r.add("restriction commutes with premutation exactly", same_pre);

  const QP left = mutate_qp(restrict_qp(base, keep), k);
  const QP right = restrict_qp(mutate_qp(base, k), keep);
  r.add("quiver matrices", same_labelled_matrix(net_arrow_matrix(left.quiver()), net_arrow_matrix(right.quiver())));
  compare_multiplicities(r, left.quiver(), right.quiver(), "mutate-restrict vs restrict-mutate");
  compare_dims(r, left, right, order, "mutate-restrict vs restrict-mutate");
  const bool exact = left.quiver() == right.quiver() &&
                     cyclic_normal_form(left.potential()) == cyclic_normal_form(right.potential());
  if (keep.size() == q.quiver().vertex_count()) {
    r.add("full vertex set: mutated QPs identical", exact);
  } else {
    r.note("mutated QPs identical", exact);
  }
  return r;
}

std::string canonical_matrix_key(const IntegerMatrix& b) {
  if (b.size() <= 8) return canonical_small(b);
  std::vector<std::vector<long long>> rows;
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::vector<long long> row;
    for (std::size_t j = 0; j < b.size(); ++j) row.push_back(b.at(i, j));
    std::sort(row.begin(), row.end());
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  std::string s = "fingerprint\n";
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + std::to_string(row[j]);
    s += '\n';
  }
  return s;
}

ExploreResult explore_mutation_class(const QP& q, int depth, int order) {
  ExploreResult out;
  CheckReport& r = out.report;
  r.name = "explore depth " + std::to_string(depth);
  r.inputs_digest = digest(qp_to_string(q) + "|" + std::to_string(depth) + "|" + std::to_string(order));
  if (!is_two_acyclic(q.quiver())) throw PreconditionError("explore: input quiver has a 2-cycle");

  // The input potential is exact. A QP at depth d >= 1 is exact up to degree
  // w >> (d - 1), since premutation can halve the degree of a term, and the
  // quiver of a mutation needs its parent exact up to degree 4.
  constexpr int kMaxOrder = 64;
  int w = std::max(working_order(order), q.order());
  const int deepest_parent = std::max(depth - 1, 0);
  auto exact_at = [&](int d) { return d == 0 ? INT_MAX : (w >> (d - 1)); };
  while (exact_at(deepest_parent) < 4 && w < kMaxOrder) w *= 2;
  w = std::min(w, std::max(kMaxOrder, q.order()));

  std::map<std::string, std::size_t> index;
  auto add_node = [&](const QP& x, int d, const std::vector<std::string>& path) {
    ClassNode n;
    n.two_acyclic = is_two_acyclic(x.quiver());
    n.canonical = canonical_matrix_key(net_arrow_matrix(x.quiver()));
    n.digest = digest(n.canonical);
    n.depth = d;
    n.path = path;
    auto [it, inserted] = index.try_emplace(n.digest, out.graph.nodes.size());
    if (inserted) out.graph.nodes.push_back(std::move(n));
    else if (!n.two_acyclic) out.graph.nodes[it->second].two_acyclic = false;
    return it->second;
  };

  // Every mutation sequence without an immediate repeat is expanded; the graph
  // keeps one node per canonical matrix.
  struct Item {
    QP qp;
    std::vector<std::string> path;
    std::size_t node;
  };
  std::deque<Item> queue;
  const QP root = with_order(q, w);
  queue.push_back({root, {}, add_node(root, 0, {})});
  std::set<std::tuple<std::string, std::string, std::string>> seen_edges;
  std::size_t sequences = 1;
  std::size_t bad = 0;
  std::size_t imprecise = 0;
  std::string first_bad;
  while (!queue.empty()) {
    Item item = std::move(queue.front());
    queue.pop_front();
    const int d = static_cast<int>(item.path.size());
    if (d >= depth || !is_two_acyclic(item.qp.quiver())) continue;
    if (exact_at(d) < 4) {
      ++imprecise;
      continue;
    }
    for (const auto& k : item.qp.quiver().vertices()) {
      if (!item.path.empty() && item.path.back() == k) continue;
      QP child = mutate_qp(item.qp, k);
      std::vector<std::string> path = item.path;
      path.push_back(k);
      ++sequences;
      if (!is_two_acyclic(child.quiver())) {
        ++bad;
        if (first_bad.empty()) {
          for (const auto& v : path) first_bad += (first_bad.empty() ? "" : ",") + v;
        }
      }
      const std::size_t idx = add_node(child, d + 1, path);
      const std::string& from = out.graph.nodes[item.node].digest;
      const std::string& to = out.graph.nodes[idx].digest;
      if (seen_edges.emplace(from, k, to).second) out.graph.edges.push_back({from, k, to});
      queue.push_back({std::move(child), std::move(path), idx});
    }
  }
  r.add("every visited quiver is 2-acyclic", bad == 0,
        std::to_string(sequences) + " mutation sequences, " + std::to_string(out.graph.nodes.size()) +
            " distinct matrices, " + std::to_string(bad) + " with 2-cycles" +
            (first_bad.empty() ? std::string() : ", first after " + first_bad));
  r.add("precision", imprecise == 0,
        "working order " + std::to_string(w) +
            (imprecise ? ", " + std::to_string(imprecise) + " nodes not expanded" : std::string()));
  return out;
}

void write_check_report(std::ostream& out, const CheckReport& r) {
  out << "check " << r.name << '\n';
  out << "inputs " << r.inputs_digest << '\n';
  for (const auto& s : r.results) {
    out << (s.informational ? "  info " : (s.pass ? "  pass " : "  FAIL ")) << s.name;
    if (s.informational) out << ": " << (s.pass ? "yes" : "no");
    out << '\n';
    if (!s.detail.empty()) {
      std::istringstream lines(s.detail);
      for (std::string line; std::getline(lines, line);) out << "    " << line << '\n';
    }
  }
  out << "result " << (r.pass ? "PASS" : "FAIL") << '\n';
  if (const SubResult* f = r.first_failure()) out << "first failure: " << f->name << '\n';
}

void write_class_graph(std::ostream& out, const ClassGraph& g) {
  out << "nodes " << g.nodes.size() << '\n';
  for (const auto& n : g.nodes) {
    out << "node " << n.digest << " depth=" << n.depth << " two-acyclic=" << (n.two_acyclic ? "yes" : "no") << '\n';
    std::istringstream lines(n.canonical);
    for (std::string line; std::getline(lines, line);) out << "  " << line << '\n';
  }
  out << "edges " << g.edges.size() << '\n';
  for (const auto& e : g.edges) out << e.from << " --" << e.vertex << "--> " << e.to << '\n';
}

}  // namespace qpsurf
