// Seeded random checks of the path algebra: associativity, distributivity,
// substitutions as algebra maps, cyclic derivatives under rotation.
#ifndef QPSURF_TESTS_PROPERTIES_HPP
#define QPSURF_TESTS_PROPERTIES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "qpsurf/path_algebra.hpp"

namespace props {

using namespace qpsurf;

struct Outcome {
  int triples = 0;
  int failures = 0;
  std::string first_failure;
};

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational coefficient() {
    Rational c(uniform(-4, 4), uniform(1, 3));
    c.canonicalize();  // the two-argument constructor does not reduce
    return c == 0 ? Rational(1) : c;
  }

  // Three vertices, up to seven arrows, 2-cycles allowed.
  QuiverPtr quiver() {
    std::vector<ArrowSpec> arrows;
    const int n = uniform(2, 7);
    for (int i = 0; i < n; ++i) {
      const int t = uniform(0, 2);
      int h = uniform(0, 1);
      if (h >= t) ++h;
      arrows.push_back({"x" + std::to_string(i), std::to_string(t), std::to_string(h)});
    }
    return share(Quiver({"0", "1", "2"}, std::move(arrows)));
  }

  AlgebraElement element(const QuiverPtr& q, const std::vector<oracle::OPath>& paths, int order) {
    AlgebraElement x(q, order);
    const int terms = uniform(1, 4);
    for (int i = 0; i < terms; ++i) x.add_term(to_path(*q, paths[pick(paths.size())]), coefficient());
    return x;
  }

  /// Random combination of cycles of positive length; zero if there are none.
  Potential potential(const QuiverPtr& q, const std::vector<oracle::OPath>& paths, int order) {
    std::vector<const oracle::OPath*> cycles;
    for (const auto& p : paths) {
      if (!p.word.empty() && oracle::head(*q, p) == oracle::tail(*q, p)) cycles.push_back(&p);
    }
    AlgebraElement s(q, order);
    if (cycles.empty()) return Potential(s);
    const int terms = uniform(1, 3);
    for (int i = 0; i < terms; ++i) s.add_term(to_path(*q, *cycles[pick(cycles.size())]), coefficient());
    return Potential(s);
  }

  /// a -> c a + (paths parallel to a of length 2..3), c nonzero.
  Substitution substitution(const QuiverPtr& q, const std::vector<oracle::OPath>& paths, int order) {
    std::vector<AlgebraElement> images;
    for (std::size_t a = 0; a < q->arrow_count(); ++a) {
      AlgebraElement img = AlgebraElement::arrow(q, order, q->arrow(a).id) * coefficient();
      for (const auto& p : paths) {
        if (p.word.size() < 2 || p.word.size() > 3) continue;
        if (oracle::head(*q, p) != q->arrow(a).head || oracle::tail(*q, p) != q->arrow(a).tail) continue;
        if (uniform(0, 3) == 0) img.add_term(to_path(*q, p), coefficient());
      }
      images.push_back(std::move(img));
    }
    return Substitution(q, q, order, std::move(images));
  }

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  static Path to_path(const Quiver& q, const oracle::OPath& p) {
    Path r;
    for (auto a : p.word) r.arrows.push_back(static_cast<std::uint32_t>(a));
    r.vertex = static_cast<std::uint32_t>(oracle::head(q, p));
    return r;
  }

  std::mt19937_64 rng_;
};

inline Potential rotate_terms(const Potential& s, Generator& g) {
  AlgebraElement r(s.quiver_ptr(), s.order());
  for (const auto& [p, c] : s.element().terms()) {
    const std::size_t n = p.arrows.size();
    const std::size_t k = static_cast<std::size_t>(g.uniform(0, static_cast<int>(n) - 1));
    Path q;
    for (std::size_t i = 0; i < n; ++i) q.arrows.push_back(p.arrows[(k + i) % n]);
    q.vertex = static_cast<std::uint32_t>(s.quiver().arrow(q.arrows.front()).head);
    r.add_term(q, c);
  }
  return Potential(r);
}

inline Outcome run(std::uint64_t seed, int count) {
  Generator g(seed);
  Outcome out;
  const int order = 6;
  auto fail = [&](int i, const char* what) {
    ++out.failures;
    if (out.first_failure.empty()) out.first_failure = "triple " + std::to_string(i) + ": " + what;
  };
  for (int i = 0; i < count; ++i) {
    const QuiverPtr q = g.quiver();
    const auto paths = oracle::all_paths(*q, 3);
    const AlgebraElement x = g.element(q, paths, order);
    const AlgebraElement y = g.element(q, paths, order);
    const AlgebraElement z = g.element(q, paths, order);
    ++out.triples;
    if (!((x * y) * z == x * (y * z))) fail(i, "associativity");
    if (!(x * (y + z) == x * y + x * z)) fail(i, "left distributivity");
    if (!((x + y) * z == x * z + y * z)) fail(i, "right distributivity");

    const Substitution phi = g.substitution(q, paths, order);
    if (!(phi.apply(x * y) == phi.apply(x) * phi.apply(y))) fail(i, "substitution is multiplicative");
    if (!(phi.apply(x + z) == phi.apply(x) + phi.apply(z))) fail(i, "substitution is additive");

    const Potential s = g.potential(q, paths, order);
    const Potential r = rotate_terms(s, g);
    const Potential n = cyclic_normal_form(s);
    if (!(cyclic_normal_form(r) == n)) fail(i, "normal form of a rotation");
    if (!(cyclic_normal_form(n) == n)) fail(i, "normal form is idempotent");
    for (const auto& a : q->arrows()) {
      if (!(cyclic_derivative(s, a.id) == cyclic_derivative(r, a.id))) {
        fail(i, "cyclic derivative under rotation");
        break;
      }
    }
    if (!(cyclic_normal_form(phi.apply(s)) == cyclic_normal_form(phi.apply(r)))) {
      fail(i, "substitution respects cyclic equivalence");
    }
  }
  return out;
}

}  // namespace props

#endif  // QPSURF_TESTS_PROPERTIES_HPP
