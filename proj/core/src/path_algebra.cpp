#include "qpsurf/path_algebra.hpp"

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

bool same_quiver(const QuiverPtr& a, const QuiverPtr& b) { return a == b || *a == *b; }

}  // namespace

std::size_t path_head(const Quiver& q, const Path& p) {
  return p.arrows.empty() ? p.vertex : q.arrow(p.arrows.front()).head;
}

std::size_t path_tail(const Quiver& q, const Path& p) {
  return p.arrows.empty() ? p.vertex : q.arrow(p.arrows.back()).tail;
}

bool is_cycle(const Quiver& q, const Path& p) { return !p.arrows.empty() && path_head(q, p) == path_tail(q, p); }

Path make_path(const Quiver& q, const std::vector<std::string>& arrow_ids) {
  if (arrow_ids.empty()) throw PreconditionError("make_path: empty arrow list");
  Path p;
  for (const auto& id : arrow_ids) p.arrows.push_back(static_cast<std::uint32_t>(q.arrow_index(id)));
  for (std::size_t j = 0; j + 1 < p.arrows.size(); ++j) {
    if (q.arrow(p.arrows[j]).tail != q.arrow(p.arrows[j + 1]).head) {
      throw PreconditionError("arrows '" + arrow_ids[j] + "' and '" + arrow_ids[j + 1] + "' do not compose");
    }
  }
  p.vertex = static_cast<std::uint32_t>(q.arrow(p.arrows.front()).head);
  return p;
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e:" + q.vertex(p.vertex);
  std::string out;
  for (std::size_t j = 0; j < p.arrows.size(); ++j) {
    if (j) out += ' ';
    out += q.arrow(p.arrows[j]).id;
  }
  return out;
}

std::vector<std::uint32_t> least_rotation(const std::vector<std::uint32_t>& word) {
  const std::size_t n = word.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto a = word[(r + i) % n];
      const auto b = word[(best + i) % n];
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  std::vector<std::uint32_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = word[(best + i) % n];
  return out;
}

// ---------------------------------------------------------------------------

AlgebraElement::AlgebraElement(QuiverPtr quiver, int order) : quiver_(std::move(quiver)), order_(order) {
  if (!quiver_) throw PreconditionError("algebra element without a quiver");
  if (order_ < 0) throw PreconditionError("negative truncation order");
}

AlgebraElement AlgebraElement::idempotent(QuiverPtr quiver, int order, std::string_view vertex) {
  AlgebraElement x(std::move(quiver), order);
  Path p;
  p.vertex = static_cast<std::uint32_t>(x.quiver().vertex_index(vertex));
  x.add_term(p, 1);
  return x;
}

AlgebraElement AlgebraElement::arrow(QuiverPtr quiver, int order, std::string_view arrow_id) {
  return path(std::move(quiver), order, {std::string(arrow_id)});
}

AlgebraElement AlgebraElement::path(QuiverPtr quiver, int order, const std::vector<std::string>& arrow_ids,
                                    const Rational& coefficient) {
  AlgebraElement x(std::move(quiver), order);
  x.add_term(make_path(x.quiver(), arrow_ids), coefficient);
  return x;
}

void AlgebraElement::add_term(const Path& p, const Rational& c) {
  if (c == 0 || static_cast<int>(p.length()) > order_) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational AlgebraElement::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

AlgebraElement AlgebraElement::homogeneous_part(std::size_t d) const {
  AlgebraElement out(quiver_, order_);
  for (const auto& [p, c] : terms_) {
    if (p.length() == d) out.terms_.emplace_hint(out.terms_.end(), p, c);
  }
  return out;
}

AlgebraElement AlgebraElement::truncated(int d) const {
  AlgebraElement out(quiver_, std::min(d, order_));
  for (const auto& [p, c] : terms_) {
    if (static_cast<int>(p.length()) <= d) out.terms_.emplace_hint(out.terms_.end(), p, c);
  }
  return out;
}

AlgebraElement AlgebraElement::with_order(int order) const {
  AlgebraElement out(quiver_, order);
  for (const auto& [p, c] : terms_) {
    if (static_cast<int>(p.length()) <= order) out.terms_.emplace_hint(out.terms_.end(), p, c);
  }
  return out;
}

int AlgebraElement::min_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.length());
}

int AlgebraElement::max_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.length());
}

void AlgebraElement::check_compatible(const AlgebraElement& other, const char* op) const {
  if (!same_quiver(quiver_, other.quiver_)) throw PreconditionError(std::string(op) + ": elements over different quivers");
  if (order_ != other.order_) throw PreconditionError(std::string(op) + ": mismatched truncation orders");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  check_compatible(other, "add");
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  check_compatible(other, "subtract");
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [p, coeff] : terms_) coeff *= c;
  }
  return *this;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  x.check_compatible(y, "multiply");
  const Quiver& q = x.quiver();
  AlgebraElement out(x.quiver_, x.order_);
  for (const auto& [p, cp] : x.terms_) {
    const std::size_t tail = path_tail(q, p);
    for (const auto& [r, cr] : y.terms_) {
      if (static_cast<int>(p.length() + r.length()) > x.order_) break;  // terms of y sorted by length
      if (path_head(q, r) != tail) continue;
      Path prod;
      if (p.arrows.empty()) {
        prod = r;
      } else {
        prod.arrows.reserve(p.length() + r.length());
        prod.arrows = p.arrows;
        prod.arrows.insert(prod.arrows.end(), r.arrows.begin(), r.arrows.end());
        prod.vertex = p.vertex;
      }
      out.add_term(prod, cp * cr);
    }
  }
  return out;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return same_quiver(a.quiver_, b.quiver_) && a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------

Potential::Potential(QuiverPtr quiver, int order) : element_(std::move(quiver), order) {}

Potential::Potential(AlgebraElement element) : element_(std::move(element)) {
  for (const auto& [p, c] : element_.terms()) {
    if (!is_cycle(element_.quiver(), p)) {
      throw PreconditionError("potential term '" + path_to_string(element_.quiver(), p) +
                              "' is not a cycle of positive length");
    }
  }
}

bool Potential::is_qp_form() const {
  std::set<std::vector<std::uint32_t>> seen;
  for (const auto& [p, c] : element_.terms()) {
    if (!seen.insert(least_rotation(p.arrows)).second) return false;
  }
  return true;
}

AlgebraElement cyclic_derivative(const Potential& s, std::uint32_t a) {
  const Quiver& q = s.quiver();
  if (a >= q.arrow_count()) throw PreconditionError("cyclic derivative: arrow index out of range");
  AlgebraElement out(s.quiver_ptr(), s.order());
  for (const auto& [p, c] : s.element().terms()) {
    const std::size_t d = p.length();
    for (std::size_t i = 0; i < d; ++i) {
      if (p.arrows[i] != a) continue;
      Path r;
      r.arrows.reserve(d - 1);
      for (std::size_t j = i + 1; j < d; ++j) r.arrows.push_back(p.arrows[j]);
      for (std::size_t j = 0; j < i; ++j) r.arrows.push_back(p.arrows[j]);
      // Remainder runs from h(a) to t(a); for d = 1 it would be e_{t(a)}, impossible without loops.
      r.vertex = r.arrows.empty() ? static_cast<std::uint32_t>(q.arrow(a).tail)
                                  : static_cast<std::uint32_t>(q.arrow(r.arrows.front()).head);
      out.add_term(r, c);
    }
  }
  return out;
}

AlgebraElement cyclic_derivative(const Potential& s, std::string_view arrow_id) {
  return cyclic_derivative(s, static_cast<std::uint32_t>(s.quiver().arrow_index(arrow_id)));
}

AlgebraElement cyclic_normal_form(const AlgebraElement& x) {
  const Quiver& q = x.quiver();
  AlgebraElement out(x.quiver_ptr(), x.order());
  for (const auto& [p, c] : x.terms()) {
    if (!is_cycle(q, p)) {
      out.add_term(p, c);
      continue;
    }
    Path r;
    r.arrows = least_rotation(p.arrows);
    r.vertex = static_cast<std::uint32_t>(q.arrow(r.arrows.front()).head);
    out.add_term(r, c);
  }
  return out;
}

Potential cyclic_normal_form(const Potential& s) { return Potential(cyclic_normal_form(s.element())); }

bool cyclically_equivalent(const Potential& a, const Potential& b) {
  return cyclic_normal_form(a) == cyclic_normal_form(b);
}

// ---------------------------------------------------------------------------

Substitution::Substitution(QuiverPtr base, QuiverPtr target, int order, std::vector<AlgebraElement> images)
    : base_(std::move(base)), target_(std::move(target)), order_(order), images_(std::move(images)) {
  if (base_->vertices() != target_->vertices()) {
    throw PreconditionError("substitution: base and target quivers must share the vertex list");
  }
  if (images_.size() != base_->arrow_count()) throw PreconditionError("substitution: one image per base arrow required");
  for (std::size_t a = 0; a < images_.size(); ++a) {
    auto& img = images_[a];
    if (!same_quiver(img.quiver_ptr(), target_)) throw PreconditionError("substitution image over the wrong quiver");
    if (img.order() != order_) img = img.with_order(order_);
    const Arrow& arr = base_->arrow(a);
    for (const auto& [p, c] : img.terms()) {
      if (p.arrows.empty()) {
        throw PreconditionError("substitution image of '" + arr.id + "' has a degree-0 term");
      }
      if (path_head(*target_, p) != arr.head || path_tail(*target_, p) != arr.tail) {
        throw PreconditionError("substitution image term '" + path_to_string(*target_, p) + "' of arrow '" + arr.id +
                                "' has the wrong endpoints");
      }
    }
  }
}

Substitution Substitution::identity(QuiverPtr quiver, int order) {
  std::vector<AlgebraElement> images;
  images.reserve(quiver->arrow_count());
  for (const auto& a : quiver->arrows()) images.push_back(AlgebraElement::arrow(quiver, order, a.id));
  return Substitution(quiver, quiver, order, std::move(images));
}

AlgebraElement Substitution::apply(const AlgebraElement& x) const {
  if (!same_quiver(x.quiver_ptr(), base_)) throw PreconditionError("substitution applied to element over another quiver");
  AlgebraElement out(target_, order_);
  for (const auto& [p, c] : x.terms()) {
    if (p.arrows.empty()) {
      out.add_term(p, c);
      continue;
    }
    AlgebraElement prod = images_[p.arrows.front()];
    for (std::size_t j = 1; j < p.arrows.size() && !prod.is_zero(); ++j) prod = prod * images_[p.arrows[j]];
    prod *= c;
    out += prod;
  }
  return out;
}

Potential Substitution::apply(const Potential& s) const { return Potential(apply(s.element())); }

Substitution Substitution::after(const Substitution& first) const {
  if (!same_quiver(first.target_, base_)) throw PreconditionError("substitution composition: quiver mismatch");
  std::vector<AlgebraElement> images;
  images.reserve(first.images_.size());
  for (const auto& img : first.images_) images.push_back(apply(img.with_order(order_)));
  return Substitution(first.base_, target_, order_, std::move(images));
}

bool substitution_is_isomorphism(const Substitution& f) {
  const Quiver& base = f.base();
  const Quiver& target = f.target();
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::uint32_t>> base_blocks;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::uint32_t>> target_blocks;
  for (std::uint32_t a = 0; a < base.arrow_count(); ++a) base_blocks[{base.arrow(a).tail, base.arrow(a).head}].push_back(a);
  for (std::uint32_t a = 0; a < target.arrow_count(); ++a) {
    target_blocks[{target.arrow(a).tail, target.arrow(a).head}].push_back(a);
  }
  std::set<std::pair<std::size_t, std::size_t>> keys;
  for (const auto& [k, v] : base_blocks) keys.insert(k);
  for (const auto& [k, v] : target_blocks) keys.insert(k);
  for (const auto& key : keys) {
    const auto& rows = base_blocks[key];
    const auto& cols = target_blocks[key];
    if (rows.size() != cols.size()) return false;
    std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        Path p;
        p.arrows = {cols[j]};
        p.vertex = static_cast<std::uint32_t>(target.arrow(cols[j]).head);
        m[i][j] = f.image(rows[i]).coefficient(p);
      }
    }
    if (dense_rank(std::move(m)) != rows.size()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

void write_element(std::ostream& out, const AlgebraElement& x) {
  for (const auto& [p, c] : x.terms()) out << format_rational(c) << ' ' << path_to_string(x.quiver(), p) << '\n';
}

std::string element_to_string(const AlgebraElement& x) {
  std::ostringstream os;
  write_element(os, x);
  return os.str();
}

AlgebraElement parse_element_lines(const std::vector<std::string>& lines, QuiverPtr quiver, int order) {
  AlgebraElement x(quiver, order);
  for (const auto& line : lines) {
    const auto tok = detail::tokenize(line);
    if (tok.empty()) continue;
    if (tok.size() < 2) throw ParseError("element line '" + line + "': expected a coefficient and a path");
    const Rational c = parse_rational(tok[0]);
    Path p;
    if (tok.size() == 2 && tok[1].rfind("e:", 0) == 0) {
      auto v = quiver->find_vertex(tok[1].substr(2));
      if (!v) throw ParseError("element line '" + line + "': unknown vertex");
      p.vertex = static_cast<std::uint32_t>(*v);
    } else {
      try {
        p = make_path(*quiver, std::vector<std::string>(tok.begin() + 1, tok.end()));
      } catch (const PreconditionError& e) {
        throw ParseError("element line '" + line + "': " + e.what());
      }
    }
    x.add_term(p, c);
  }
  return x;
}

AlgebraElement parse_element(std::string_view text, QuiverPtr quiver, int order) {
  std::vector<std::string> lines;
  for (auto& l : detail::content_lines(text)) lines.push_back(std::move(l.text));
  return parse_element_lines(lines, std::move(quiver), order);
}

}  // namespace qpsurf
