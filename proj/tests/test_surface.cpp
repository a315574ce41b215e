#include <doctest.h>

#include <algorithm>

#include "qpsurf/corpus.hpp"
#include "qpsurf/error.hpp"
#include "qpsurf/surface.hpp"

using namespace qpsurf;

namespace {

IntegerMatrix b_of(std::string_view name) { return signed_adjacency(corpus_triangulation(name)); }

bool has_message(const Diagnostics& d, std::string_view needle) {
  return std::any_of(d.messages.begin(), d.messages.end(),
                     [&](const std::string& m) { return m.find(needle) != std::string::npos; });
}

// Torus whose puncture scalar is zero.
Triangulation with_point_scalar_zero() {
  return parse_triangulation(
      "surface genus=1 boundary=0\nmarked p puncture scalar=0/1\narc 1 p p\narc 2 p p\narc 3 p p\n"
      "tri 1 2 3\ntri 1 2 3\n");
}

}  // namespace

TEST_SUITE("surface") {
  TEST_CASE("corpus triangulations are valid and have the expected rank") {
    for (const auto& name : corpus_triangulation_names()) {
      CAPTURE(name);
      const Triangulation t = corpus_triangulation(name);
      CHECK(validate_triangulation(t).ok);
      CHECK(static_cast<long long>(t.arc_ids().size()) == expected_rank(t));
      const IntegerMatrix b = signed_adjacency(t);
      CHECK(b.is_skew_symmetric());
      CHECK(b.max_abs_entry() <= 2);
    }
  }

  TEST_CASE("torus matrix is the double cyclic triangle") {
    const IntegerMatrix b = b_of("torus");
    CHECK(b.at("1", "2") == 2);
    CHECK(b.at("2", "3") == 2);
    CHECK(b.at("3", "1") == 2);
  }

  TEST_CASE("hexagon central triangle gives an oriented 3-cycle") {
    const IntegerMatrix b = b_of("hexagon");
    for (std::size_t i = 0; i < 3; ++i) {
      long long row = 0;
      for (std::size_t j = 0; j < 3; ++j) {
        if (i != j) CHECK(std::abs(b.at(i, j)) == 1);
        row += b.at(i, j);
      }
      CHECK(row == 0);
    }
  }

  TEST_CASE("fan triangulations give linear quivers") {
    const IntegerMatrix p = b_of("pentagon");
    CHECK(std::abs(p.at("d13", "d14")) == 1);
    const IntegerMatrix h = b_of("hexagon-fan");
    long long nonzero = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) nonzero += h.at(i, j) != 0;
    }
    CHECK(nonzero == 4);
  }

  TEST_CASE("self-folded triangles fold onto their loop") {
    const Triangulation t = corpus_triangulation("once-punctured-square-loop");
    const auto pi = fold_map(t);
    CHECK(pi.at("f") == "l");
    CHECK(pi.at("l") == "l");
    const auto arcs = flippable_arcs(t);
    CHECK(std::find(arcs.begin(), arcs.end(), "f") == arcs.end());
    CHECK_THROWS_AS((void)flip(t, "f"), PreconditionError);
    CHECK_THROWS_AS((void)flip(t, "nope"), PreconditionError);
  }

  TEST_CASE("flips realise matrix mutation") {
    for (const auto& name : corpus_triangulation_names()) {
      const Triangulation t = corpus_triangulation(name);
      for (const auto& arc : flippable_arcs(t)) {
        CAPTURE(name);
        CAPTURE(arc);
        const FlipResult f = flip(t, arc);
        CHECK(validate_triangulation(f.triangulation).ok);
        CHECK(same_labelled_matrix(mutate_matrix(signed_adjacency(t), arc).relabeled(f.relabel),
                                   signed_adjacency(f.triangulation)));
        // Flipping back restores the matrix.
        const FlipResult g = flip(f.triangulation, f.new_arc);
        std::vector<std::pair<std::string, std::string>> back;
        for (const auto& [from, to] : g.relabel) back.emplace_back(to, from == f.new_arc ? arc : from);
        CHECK(same_labelled_matrix(signed_adjacency(g.triangulation).relabeled(back), signed_adjacency(t)));
      }
    }
  }

  TEST_CASE("excluded surfaces are rejected") {
    const Triangulation digon = parse_triangulation(
        "surface genus=0 boundary=1\nmarked m1 boundary=1\nmarked m2 boundary=1\n"
        "bseg s1 m1 m2 on=1\nbseg s2 m2 m1 on=1\n");
    const Diagnostics d = validate_triangulation(digon);
    CHECK_FALSE(d.ok);
    CHECK(has_message(d, "digon"));
    CHECK_THROWS_AS(require_valid(digon), PreconditionError);

    const Triangulation sphere = parse_triangulation(
        "surface genus=0 boundary=0\nmarked p1 puncture\nmarked p2 puncture\nmarked p3 puncture\n");
    CHECK(has_message(validate_triangulation(sphere), "sphere"));
  }

  TEST_CASE("broken triangulations are diagnosed") {
    // Torus with one triangle listed only once: arcs lose a side.
    const Triangulation t = parse_triangulation(
        "surface genus=1 boundary=0\nmarked p puncture\narc 1 p p\narc 2 p p\narc 3 p p\ntri 1 2 3\n");
    CHECK_FALSE(validate_triangulation(t).ok);
    CHECK_THROWS_AS((void)parse_triangulation("surface genus=1\nfoo\n"), ParseError);
    const Triangulation zero = with_point_scalar_zero();
    CHECK_FALSE(validate_triangulation(zero).ok);
  }

  TEST_CASE("triangulation text round trip") {
    for (const auto& name : corpus_triangulation_names()) {
      const Triangulation t = corpus_triangulation(name);
      CHECK(parse_triangulation(triangulation_to_string(t)) == t);
    }
  }
}
