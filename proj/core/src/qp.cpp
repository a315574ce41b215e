#include "qpsurf/qp.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "qpsurf/detail/text.hpp"
#include "qpsurf/error.hpp"
#include "qpsurf/sparse_rank.hpp"

namespace qpsurf {

namespace {

Path word_path(const Quiver& q, std::vector<std::uint32_t> word) {
  Path p;
  p.vertex = static_cast<std::uint32_t>(q.arrow(word.front()).head);
  p.arrows = std::move(word);
  return p;
}

Path arrow_path(const Quiver& q, std::uint32_t a) { return word_path(q, {a}); }

/// Basis change on the arrows of one vertex pair, bringing the degree-2
/// pairing matrix to a partial identity: L * M * R has a single 1 in each
/// pivot row and column and zeros elsewhere.
struct PairingReduction {
  std::vector<std::vector<Rational>> left;   // |rows| x |rows|
  std::vector<std::vector<Rational>> right;  // |cols| x |cols|
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
};

PairingReduction reduce_pairing(std::vector<std::vector<Rational>> w) {
  const std::size_t rows = w.size();
  const std::size_t cols = rows ? w[0].size() : 0;
  PairingReduction red;
  red.left.assign(rows, std::vector<Rational>(rows));
  red.right.assign(cols, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i) red.left[i][i] = 1;
  for (std::size_t j = 0; j < cols; ++j) red.right[j][j] = 1;
  std::vector<bool> row_used(rows, false);
  std::vector<bool> col_used(cols, false);
  for (;;) {
    std::size_t r = rows;
    std::size_t c = cols;
    for (std::size_t i = 0; i < rows && r == rows; ++i) {
      if (row_used[i]) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!col_used[j] && w[i][j] != 0) {
          r = i;
          c = j;
          break;
        }
      }
    }
    if (r == rows) break;
    const Rational s = 1 / w[r][c];
    for (auto& v : w[r]) v *= s;
    for (auto& v : red.left[r]) v *= s;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || w[i][c] == 0) continue;
      const Rational f = -w[i][c];
      for (std::size_t j = 0; j < cols; ++j) w[i][j] += f * w[r][j];
      for (std::size_t j = 0; j < rows; ++j) red.left[i][j] += f * red.left[r][j];
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (j == c || w[r][j] == 0) continue;
      const Rational f = -w[r][j];
      for (std::size_t i = 0; i < rows; ++i) w[i][j] += f * w[i][c];
      for (std::size_t i = 0; i < cols; ++i) red.right[i][j] += f * red.right[i][c];
    }
    row_used[r] = true;
    col_used[c] = true;
    red.pivots.emplace_back(r, c);
  }
  return red;
}

QuiverPtr sub_quiver(const Quiver& q, const std::vector<bool>& keep_arrow) {
  std::vector<ArrowSpec> arrows;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    if (keep_arrow[a]) arrows.push_back({q.arrow(a).id, q.vertex(q.arrow(a).tail), q.vertex(q.arrow(a).head)});
  }
  return share(Quiver(q.vertices(), std::move(arrows)));
}

}  // namespace

Diagnostics validate_qp(const QP& q) {
  Diagnostics d;
  const Quiver& quiver = q.quiver();
  std::map<std::vector<std::uint32_t>, Path> seen;
  for (const auto& [p, c] : q.potential().element().terms()) {
    if (!is_cycle(quiver, p)) {
      d.ok = false;
      d.messages.push_back("term '" + path_to_string(quiver, p) + "' is not a cycle of positive length");
      continue;
    }
    auto [it, inserted] = seen.try_emplace(least_rotation(p.arrows), p);
    if (!inserted) {
      d.ok = false;
      d.messages.push_back("terms '" + path_to_string(quiver, it->second) + "' and '" + path_to_string(quiver, p) +
                           "' are cyclically equivalent");
    }
  }
  return d;
}

bool is_reduced(const QP& q) { return q.potential().element().homogeneous_part(2).is_zero(); }

bool is_trivial(const QP& q) {
  const AlgebraElement& s = q.potential().element();
  if (!(s.homogeneous_part(2) == s)) return false;
  // Derivatives of a degree-2 potential are linear in the arrows; check they span.
  const Quiver& quiver = q.quiver();
  const std::size_t n = quiver.arrow_count();
  std::vector<std::vector<Rational>> m;
  for (std::uint32_t a = 0; a < n; ++a) {
    const AlgebraElement d = cyclic_derivative(q.potential(), a);
    std::vector<Rational> row(n);
    for (const auto& [p, c] : d.terms()) row[p.arrows.front()] = c;
    m.push_back(std::move(row));
  }
  return dense_rank(std::move(m)) == n;
}

QP premutate_qp(const QP& q, std::string_view k_id) {
  const Quiver& quiver = q.quiver();
  const std::size_t k = quiver.vertex_index(k_id);
  QuiverPtr target = share(premutate_quiver(quiver, k_id));  // throws on a 2-cycle at k
  const int order = q.order();

  auto mapped = [&](std::uint32_t a) {
    const Arrow& arr = quiver.arrow(a);
    const std::string id = (arr.tail == k || arr.head == k) ? reversed_arrow_name(arr.id) : arr.id;
    return static_cast<std::uint32_t>(target->arrow_index(id));
  };

  AlgebraElement s(target, order);
  const Potential normal = cyclic_normal_form(q.potential());
  for (const auto& [p, c] : normal.element().terms()) {
    // Least rotation whose word does not begin at k, i.e. h(a_1) != k.
    const std::size_t d = p.length();
    std::vector<std::uint32_t> best;
    for (std::size_t r = 0; r < d; ++r) {
      std::vector<std::uint32_t> rot(d);
      for (std::size_t i = 0; i < d; ++i) rot[i] = p.arrows[(r + i) % d];
      if (quiver.arrow(rot.front()).head == k) continue;
      if (best.empty() || rot < best) best = std::move(rot);
    }
    std::vector<std::uint32_t> word;
    for (std::size_t j = 0; j < d; ++j) {
      const Arrow& a = quiver.arrow(best[j]);
      if (a.tail == k) {
        const Arrow& b = quiver.arrow(best[j + 1]);
        word.push_back(static_cast<std::uint32_t>(target->arrow_index(hook_arrow_name(a.id, b.id))));
        ++j;
      } else {
        word.push_back(mapped(best[j]));
      }
    }
    s.add_term(word_path(*target, std::move(word)), c);
  }
  for (const auto& a : quiver.arrows()) {
    if (a.tail != k) continue;
    for (const auto& b : quiver.arrows()) {
      if (b.head != k) continue;
      std::vector<std::uint32_t> word = {
          static_cast<std::uint32_t>(target->arrow_index(reversed_arrow_name(b.id))),
          static_cast<std::uint32_t>(target->arrow_index(reversed_arrow_name(a.id))),
          static_cast<std::uint32_t>(target->arrow_index(hook_arrow_name(a.id, b.id))),
      };
      s.add_term(word_path(*target, std::move(word)), 1);
    }
  }
  return QP(cyclic_normal_form(Potential(std::move(s))));
}

SplitResult split_qp(const QP& q) {
  if (auto diag = validate_qp(q); !diag.ok) {
    throw PreconditionError("split_qp: not a quiver with potential: " + diag.messages.front());
  }
  const Quiver& quiver = q.quiver();
  const QuiverPtr& qptr = q.quiver_ptr();
  const int order = q.order();
  Potential s = cyclic_normal_form(q.potential());
  Substitution witness = Substitution::identity(qptr, order);

  // Degree-2 basis change, one unordered vertex pair at a time.
  const AlgebraElement s2 = s.element().homogeneous_part(2);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  if (!s2.is_zero()) {
    std::map<std::pair<std::size_t, std::size_t>, std::pair<std::set<std::uint32_t>, std::set<std::uint32_t>>> blocks;
    for (const auto& [p, c] : s2.terms()) {
      const std::uint32_t x = p.arrows[0];
      const std::uint32_t y = p.arrows[1];
      const std::size_t u = quiver.arrow(x).tail;
      const std::size_t v = quiver.arrow(x).head;
      // Orient each block from the smaller vertex index to the larger one.
      if (u < v) {
        blocks[{u, v}].first.insert(x);
        blocks[{u, v}].second.insert(y);
      } else {
        blocks[{v, u}].first.insert(y);
        blocks[{v, u}].second.insert(x);
      }
    }
    std::vector<AlgebraElement> images;
    for (const auto& a : quiver.arrows()) images.push_back(AlgebraElement::arrow(qptr, order, a.id));
    for (const auto& [key, block] : blocks) {
      const std::vector<std::uint32_t> rows(block.first.begin(), block.first.end());
      const std::vector<std::uint32_t> cols(block.second.begin(), block.second.end());
      std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(cols.size()));
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
          m[i][j] = s2.coefficient(word_path(quiver, least_rotation({rows[i], cols[j]})));
        }
      }
      const PairingReduction red = reduce_pairing(std::move(m));
      for (std::size_t i = 0; i < rows.size(); ++i) {
        AlgebraElement img(qptr, order);
        for (std::size_t r = 0; r < rows.size(); ++r) img.add_term(arrow_path(quiver, rows[r]), red.left[r][i]);
        images[rows[i]] = std::move(img);
      }
      for (std::size_t j = 0; j < cols.size(); ++j) {
        AlgebraElement img(qptr, order);
        for (std::size_t c = 0; c < cols.size(); ++c) img.add_term(arrow_path(quiver, cols[c]), red.right[j][c]);
        images[cols[j]] = std::move(img);
      }
      for (const auto& [r, c] : red.pivots) pairs.emplace_back(rows[r], cols[c]);
    }
    Substitution basis(qptr, qptr, order, std::move(images));
    s = cyclic_normal_form(basis.apply(s));
    witness = basis;
  }

  std::vector<int> role(quiver.arrow_count(), -1);  // pair index, or -1 for reduced arrows
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    role[pairs[j].first] = static_cast<int>(j);
    role[pairs[j].second] = static_cast<int>(j);
  }

  AlgebraElement trivial_sum(qptr, order);
  for (const auto& [a, b] : pairs) trivial_sum.add_term(word_path(quiver, least_rotation({a, b})), 1);
  if (!(s.element().homogeneous_part(2) == trivial_sum)) {
    throw std::logic_error("split_qp: degree-2 basis change did not produce a sum of disjoint 2-cycles");
  }

  int passes = 0;
  for (;; ++passes) {
    if (passes > order + 2) throw std::logic_error("split_qp: unitriangular passes did not converge");
    std::vector<AlgebraElement> u(pairs.size(), AlgebraElement(qptr, order));
    std::vector<AlgebraElement> v(pairs.size(), AlgebraElement(qptr, order));
    bool any = false;
    for (const auto& [p, c] : s.element().terms()) {
      if (p.length() <= 2) continue;
      const auto it = std::find_if(p.arrows.begin(), p.arrows.end(), [&](std::uint32_t a) { return role[a] >= 0; });
      if (it == p.arrows.end()) continue;
      const auto pos = static_cast<std::size_t>(it - p.arrows.begin());
      std::vector<std::uint32_t> rest;
      for (std::size_t i = 1; i < p.length(); ++i) rest.push_back(p.arrows[(pos + i) % p.length()]);
      const std::uint32_t x = *it;
      const auto j = static_cast<std::size_t>(role[x]);
      // c * x rest: for x = a_j it is a_j u_j, for x = b_j it is rest b_j = v_j b_j.
      (x == pairs[j].first ? u[j] : v[j]).add_term(word_path(quiver, std::move(rest)), c);
      any = true;
    }
    if (!any) break;
    std::vector<AlgebraElement> images;
    for (const auto& a : quiver.arrows()) images.push_back(AlgebraElement::arrow(qptr, order, a.id));
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      images[pairs[j].first] -= v[j];
      images[pairs[j].second] -= u[j];
    }
    Substitution step(qptr, qptr, order, std::move(images));
    s = cyclic_normal_form(step.apply(s));
    witness = step.after(witness);
  }

  std::vector<bool> keep_reduced(quiver.arrow_count());
  std::vector<bool> keep_trivial(quiver.arrow_count());
  for (std::size_t a = 0; a < quiver.arrow_count(); ++a) {
    keep_reduced[a] = role[a] < 0;
    keep_trivial[a] = role[a] >= 0;
  }
  QuiverPtr reduced_quiver = sub_quiver(quiver, keep_reduced);
  QuiverPtr trivial_quiver = sub_quiver(quiver, keep_trivial);
  const AlgebraElement rest = s.element() - trivial_sum;

  SplitResult out{QP(Potential(transport_element(trivial_sum, trivial_quiver))),
                  QP(Potential(transport_element(rest, reduced_quiver))), witness, {}, passes};
  for (const auto& [a, b] : pairs) out.trivial_pairs.emplace_back(quiver.arrow(a).id, quiver.arrow(b).id);
  return out;
}

QP mutate_qp(const QP& q, std::string_view k) { return split_qp(premutate_qp(q, k)).reduced; }

QP restrict_qp(const QP& q, const std::vector<std::string>& keep) {
  const Quiver& quiver = q.quiver();
  std::vector<bool> in_set(quiver.vertex_count(), false);
  for (const auto& v : keep) in_set[quiver.vertex_index(v)] = true;
  std::vector<bool> keep_arrow(quiver.arrow_count());
  for (std::size_t a = 0; a < quiver.arrow_count(); ++a) {
    keep_arrow[a] = in_set[quiver.arrow(a).tail] && in_set[quiver.arrow(a).head];
  }
  QuiverPtr target = sub_quiver(quiver, keep_arrow);
  AlgebraElement s(target, q.order());
  for (const auto& [p, c] : q.potential().element().terms()) {
    if (std::all_of(p.arrows.begin(), p.arrows.end(), [&](std::uint32_t a) { return keep_arrow[a]; })) {
      std::vector<std::uint32_t> word;
      for (auto a : p.arrows) word.push_back(static_cast<std::uint32_t>(target->arrow_index(quiver.arrow(a).id)));
      s.add_term(word_path(*target, std::move(word)), c);
    }
  }
  return QP(Potential(std::move(s)));
}

AlgebraElement transport_element(const AlgebraElement& x, const QuiverPtr& target) {
  const Quiver& from = x.quiver();
  AlgebraElement out(target, x.order());
  for (const auto& [p, c] : x.terms()) {
    Path r;
    if (p.arrows.empty()) {
      r.vertex = static_cast<std::uint32_t>(target->vertex_index(from.vertex(p.vertex)));
    } else {
      for (auto a : p.arrows) {
        const std::size_t b = target->arrow_index(from.arrow(a).id);
        if (from.vertex(from.arrow(a).tail) != target->vertex(target->arrow(b).tail) ||
            from.vertex(from.arrow(a).head) != target->vertex(target->arrow(b).head)) {
          throw PreconditionError("transport: arrow '" + from.arrow(a).id + "' has different endpoints in the target");
        }
        r.arrows.push_back(static_cast<std::uint32_t>(b));
      }
      r.vertex = static_cast<std::uint32_t>(target->arrow(r.arrows.front()).head);
    }
    out.add_term(r, c);
  }
  return out;
}

QP rename_vertices(const QP& q, const std::vector<std::pair<std::string, std::string>>& renames) {
  auto rename = [&](const std::string& v) {
    for (const auto& [from, to] : renames) {
      if (v == from) return to;
    }
    return v;
  };
  const Quiver& quiver = q.quiver();
  std::vector<std::string> vertices;
  for (const auto& v : quiver.vertices()) vertices.push_back(rename(v));
  std::vector<ArrowSpec> arrows;
  for (const auto& a : quiver.arrows()) arrows.push_back({a.id, rename(quiver.vertex(a.tail)), rename(quiver.vertex(a.head))});
  QuiverPtr target = share(Quiver(std::move(vertices), std::move(arrows)));
  // Arrow ids and order are unchanged, so paths carry over index for index.
  AlgebraElement s(target, q.order());
  for (const auto& [p, c] : q.potential().element().terms()) s.add_term(p, c);
  return QP(Potential(std::move(s)));
}

QP with_order(const QP& q, int order) { return QP(Potential(q.potential().element().with_order(order))); }

void write_qp(std::ostream& out, const QP& q) {
  out << "truncation: " << q.order() << '\n';
  write_quiver(out, q.quiver());
  out << "potential:\n";
  write_element(out, cyclic_normal_form(q.potential()).element());
}

std::string qp_to_string(const QP& q) {
  std::ostringstream os;
  write_qp(os, q);
  return os.str();
}

QP parse_qp(std::string_view text) {
  int order = -1;
  std::string quiver_text;
  std::vector<std::string> element_lines;
  bool in_potential = false;
  for (const auto& line : detail::content_lines(text)) {
    if (in_potential) {
      element_lines.push_back(line.text);
      continue;
    }
    if (line.text.rfind("truncation:", 0) == 0) {
      const auto tok = detail::tokenize(line.text.substr(11));
      if (tok.size() != 1) throw ParseError("line " + std::to_string(line.number) + ": expected 'truncation: <D>'");
      try {
        order = std::stoi(tok[0]);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line.number) + ": bad truncation order");
      }
    } else if (line.text == "potential:") {
      in_potential = true;
    } else {
      quiver_text += line.text;
      quiver_text += '\n';
    }
  }
  if (order < 1) throw ParseError("QP text needs a 'truncation: <D>' header with D >= 1");
  QuiverPtr quiver = share(parse_quiver(quiver_text));
  try {
    return QP(Potential(parse_element_lines(element_lines, quiver, order)));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid potential: ") + e.what());
  }
}

}  // namespace qpsurf
