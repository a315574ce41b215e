// Expected potentials written in the letters used for the worked examples,
// mapped onto generated arrow ids through arrow provenance.
#ifndef QPSURF_TESTS_WORKED_FORMS_HPP
#define QPSURF_TESTS_WORKED_FORMS_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpsurf/corpus.hpp"
#include "qpsurf/potential_builder.hpp"

namespace forms {

using namespace qpsurf;

/// Torus letters: a[k], b[k], c[k] are the arrows of triangle k with a b c a
/// path, a[0] and a[1] parallel (likewise b, c).
struct TorusLetters {
  std::array<std::string, 2> a, b, c;
  Rational x;
};

inline TorusLetters torus_letters(const Triangulation& t) {
  const UnreducedQuiver u = unreduced_quiver(t);
  const Quiver& q = u.quiver;
  std::array<std::vector<std::size_t>, 2> tri;
  for (std::size_t i = 0; i < q.arrow_count(); ++i) {
    if (u.provenance[i].kind != ArrowProvenance::Kind::corner || u.provenance[i].triangle > 1) {
      throw std::runtime_error("unexpected torus arrow");
    }
    tri[u.provenance[i].triangle].push_back(i);
  }
  TorusLetters l;
  const Arrow& a0 = q.arrow(tri[0].front());
  for (std::size_t k = 0; k < 2; ++k) {
    if (tri[k].size() != 3) throw std::runtime_error("torus triangle without three arrows");
    for (auto i : tri[k]) {
      const Arrow& x = q.arrow(i);
      if (x.tail == a0.tail && x.head == a0.head) l.a[k] = x.id;
    }
    const Arrow& a = q.arrow(q.arrow_index(l.a[k]));
    for (auto i : tri[k]) {
      const Arrow& x = q.arrow(i);
      if (x.head == a.tail) l.b[k] = x.id;  // a b composes: t(a) = h(b)
    }
    const Arrow& b = q.arrow(q.arrow_index(l.b[k]));
    for (auto i : tri[k]) {
      const Arrow& x = q.arrow(i);
      if (x.head == b.tail) l.c[k] = x.id;
    }
  }
  l.x = t.surface().points.front().scalar;
  return l;
}

/// a1 b1 c1 + a2 b2 c2 + x a1 b2 c1 a2 b1 c2.
inline Potential torus_expected(const TorusLetters& l, const QuiverPtr& q, int order) {
  AlgebraElement s = AlgebraElement::path(q, order, {l.a[0], l.b[0], l.c[0]}) +
                     AlgebraElement::path(q, order, {l.a[1], l.b[1], l.c[1]}) +
                     AlgebraElement::path(q, order, {l.a[0], l.b[1], l.c[0], l.a[1], l.b[0], l.c[1]}, l.x);
  return cyclic_normal_form(Potential(s));
}

/// The mutation vertex t(b1).
inline std::string torus_mutation_vertex(const TorusLetters& l, const Quiver& q) {
  return q.vertex(q.arrow(q.arrow_index(l.b[0])).tail);
}

/// c1* b2* [b2 c1] + c2* b1* [b1 c2] + x c1* b1* [b2 c1] c2* b2* [b1 c2].
inline Potential torus_mutated_expected(const TorusLetters& l, const QuiverPtr& q, int order) {
  auto st = [](const std::string& s) { return reversed_arrow_name(s); };
  const std::string b2c1 = hook_arrow_name(l.b[1], l.c[0]);
  const std::string b1c2 = hook_arrow_name(l.b[0], l.c[1]);
  AlgebraElement s =
      AlgebraElement::path(q, order, {st(l.c[0]), st(l.b[1]), b2c1}) +
      AlgebraElement::path(q, order, {st(l.c[1]), st(l.b[0]), b1c2}) +
      AlgebraElement::path(q, order, {st(l.c[0]), st(l.b[0]), b2c1, st(l.c[1]), st(l.b[1]), b1c2}, l.x);
  return cyclic_normal_form(Potential(s));
}

/// Once-punctured square of the quadrilateral example: the pair a, b at the
/// puncture and the triangles a alpha beta, gamma delta b.
struct SquareLetters {
  std::string a, b, alpha, beta, gamma, delta;
  Rational x;
};

/// Reads the letters off the unreduced potential; nullopt when it does not
/// have the shape x ab + a alpha beta + gamma delta b. Since ab and ba are
/// rotations, either puncture arrow may play the part of a.
inline std::optional<SquareLetters> square_letters(const UnreducedQP& u) {
  const Quiver& q = u.quiver.quiver;
  auto is_pair = [&](std::size_t i) { return u.quiver.provenance[i].kind == ArrowProvenance::Kind::puncture; };
  const Potential s = cyclic_normal_form(u.qp.potential());
  if (s.element().term_count() != 3) return std::nullopt;
  SquareLetters l;
  std::vector<std::array<std::size_t, 3>> cubic;  // rotated to start at the puncture arrow
  bool have_x = false;
  for (const auto& [p, c] : s.element().terms()) {
    const auto& w = p.arrows;
    if (w.size() == 2 && is_pair(w[0]) && is_pair(w[1])) {
      l.x = c;
      have_x = true;
    } else if (w.size() == 3 && c == 1) {
      std::size_t r = 0;
      while (r < 3 && !is_pair(w[r])) ++r;
      if (r == 3 || is_pair(w[(r + 1) % 3]) || is_pair(w[(r + 2) % 3])) return std::nullopt;
      cubic.push_back({w[r], w[(r + 1) % 3], w[(r + 2) % 3]});
    } else {
      return std::nullopt;
    }
  }
  if (!have_x || cubic.size() != 2 || cubic[0][0] == cubic[1][0]) return std::nullopt;
  l.a = q.arrow(cubic[0][0]).id;
  l.alpha = q.arrow(cubic[0][1]).id;
  l.beta = q.arrow(cubic[0][2]).id;
  l.b = q.arrow(cubic[1][0]).id;  // b gamma delta is a rotation of gamma delta b
  l.gamma = q.arrow(cubic[1][1]).id;
  l.delta = q.arrow(cubic[1][2]).id;
  return l;
}

/// -gamma delta alpha beta / x on `q`.
inline Potential square_reduced_expected(const SquareLetters& l, const QuiverPtr& q, int order) {
  return cyclic_normal_form(
      Potential(AlgebraElement::path(q, order, {l.gamma, l.delta, l.alpha, l.beta}, -Rational(1) / l.x)));
}

}  // namespace forms

#endif  // QPSURF_TESTS_WORKED_FORMS_HPP
