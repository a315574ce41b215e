#include <doctest.h>

#include "qpsurf/corpus.hpp"
#include "qpsurf/error.hpp"
#include "qpsurf/potential_builder.hpp"
#include "qpsurf/qp.hpp"

using namespace qpsurf;

namespace {

QP three_cycle() { return parse_qp(corpus_entry("three-cycle").text); }

AlgebraElement word(const QP& q, std::vector<std::string> ids, Rational c = 1) {
  return AlgebraElement::path(q.quiver_ptr(), q.order(), ids, c);
}

// witness(S) == trivial + reduced (transported onto the input quiver) in cyclic normal form.
void check_split(const QP& q) {
  const SplitResult s = split_qp(q);
  CHECK(substitution_is_isomorphism(s.witness));
  CHECK(is_trivial(s.trivial));
  CHECK(is_reduced(s.reduced));
  const AlgebraElement sum = transport_element(s.trivial.potential().element(), q.quiver_ptr()) +
                             transport_element(s.reduced.potential().element(), q.quiver_ptr());
  CHECK(cyclic_normal_form(s.witness.apply(q.potential())) == cyclic_normal_form(Potential(sum)));
  CHECK(s.trivial.quiver().arrow_count() + s.reduced.quiver().arrow_count() == q.quiver().arrow_count());
  CHECK(s.trivial_pairs.size() * 2 == s.trivial.quiver().arrow_count());
}

}  // namespace

TEST_SUITE("qp") {
  TEST_CASE("3-cycle premutation and split") {
    const QP q = three_cycle();
    const QP p = premutate_qp(q, "2");
    const std::string bc = hook_arrow_name("b", "c");
    const Potential expected(word(p, {"a", bc}) + word(p, {"c*", "b*", bc}));
    CHECK(cyclic_normal_form(p.potential()) == cyclic_normal_form(expected));
    const SplitResult s = split_qp(p);
    CHECK(s.reduced.potential().is_zero());
    CHECK(s.reduced.quiver().arrow_count() == 2);
    CHECK(s.reduced.quiver().find_arrow("b*").has_value());
    CHECK(s.reduced.quiver().find_arrow("c*").has_value());
    check_split(p);
  }

  TEST_CASE("split of premutations across the corpus") {
    for (const auto& name : corpus_triangulation_names()) {
      CAPTURE(name);
      const QP q = qp_of_triangulation(corpus_triangulation(name), 8);
      for (const auto& k : q.quiver().vertices()) {
        CAPTURE(k);
        check_split(premutate_qp(q, k));
      }
    }
  }

  TEST_CASE("split of an unreduced potential with a nonzero quadratic mix") {
    // 2-cycles a,b and c,d between 1 and 2 with S = ab + 2cd + ad + a b c d.
    const QuiverPtr qv = share(Quiver({"1", "2"}, {{"a", "2", "1"}, {"b", "1", "2"}, {"c", "2", "1"}, {"d", "1", "2"}}));
    const int order = 8;
    AlgebraElement s = AlgebraElement::path(qv, order, {"a", "b"}) + AlgebraElement::path(qv, order, {"c", "d"}, 2) +
                       AlgebraElement::path(qv, order, {"a", "d"}) + AlgebraElement::path(qv, order, {"a", "b", "c", "d"});
    const QP q{Potential(s)};
    check_split(q);
    CHECK(split_qp(q).reduced.quiver().arrow_count() == 0);
  }

  TEST_CASE("torus mutation") {
    const QP q = qp_of_triangulation(corpus_triangulation("torus"), 6);
    const QP m = mutate_qp(q, "2");
    CHECK(is_two_acyclic(m.quiver()));
    CHECK(m.quiver().arrow_count() == 6);
    CHECK(m.potential().element().term_count() == 3);
  }

  TEST_CASE("mutation at a vertex on a 2-cycle is refused") {
    const QuiverPtr qv = share(Quiver({"1", "2"}, {{"a", "2", "1"}, {"b", "1", "2"}}));
    const QP q{Potential(AlgebraElement::path(qv, 4, {"a", "b"}))};
    CHECK_THROWS_AS((void)premutate_qp(q, "1"), PreconditionError);
    CHECK_THROWS_AS((void)mutate_qp(q, "9"), PreconditionError);
  }

  TEST_CASE("validate_qp flags rotations stored twice") {
    const QP q = three_cycle();
    AlgebraElement x = word(q, {"a", "b", "c"}) + word(q, {"b", "c", "a"});
    const QP bad{Potential(x)};
    CHECK_FALSE(validate_qp(bad).ok);
    CHECK(validate_qp(q).ok);
    CHECK_THROWS_AS((void)split_qp(bad), PreconditionError);
  }

  TEST_CASE("restriction keeps arrows inside the kept set") {
    const QP q = three_cycle();
    const QP r = restrict_qp(q, {"1", "2"});
    CHECK(r.quiver().arrow_count() == 1);
    CHECK(r.potential().is_zero());
    CHECK(r.quiver().vertex_count() == 3);
  }

  TEST_CASE("twice mutated corpus QPs keep their matrix") {
    for (const auto& name : corpus_triangulation_names()) {
      CAPTURE(name);
      const QP q = qp_of_triangulation(corpus_triangulation(name), 8);
      for (const auto& k : q.quiver().vertices()) {
        const QP twice = mutate_qp(mutate_qp(q, k), k);
        CHECK(same_labelled_matrix(net_arrow_matrix(twice.quiver()), net_arrow_matrix(q.quiver())));
      }
    }
  }

  TEST_CASE("QP text round trip") {
    const QP q = mutate_qp(qp_of_triangulation(corpus_triangulation("torus"), 6), "2");
    CHECK(parse_qp(qp_to_string(q)) == q);
    CHECK_THROWS_AS((void)parse_qp("v 1\n"), ParseError);
    CHECK_THROWS_AS((void)parse_qp("truncation: 0\nv 1\npotential:\n"), ParseError);
  }
}
