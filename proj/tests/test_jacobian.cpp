#include <doctest.h>

#include "oracle.hpp"
#include "worked_forms.hpp"
#include "qpsurf/corpus.hpp"
#include "qpsurf/error.hpp"
#include "qpsurf/jacobian.hpp"

using namespace qpsurf;

TEST_SUITE("jacobian") {
  TEST_CASE("truncated dimensions agree with brute force") {
    for (const auto& name : corpus_triangulation_names()) {
      const QP q = qp_of_triangulation(corpus_triangulation(name), 8);
      const int top = q.quiver().arrow_count() > 4 ? 4 : 5;
      const DimensionReport r = truncated_quotient_dim(q, top);
      for (int d = 1; d <= top; ++d) {
        CAPTURE(name);
        CAPTURE(d);
        CHECK(r.rows[static_cast<std::size_t>(d)].dim == oracle::truncated_dim(q, d));
        CHECK(r.rows[static_cast<std::size_t>(d)].paths == oracle::all_paths(q.quiver(), d).size());
      }
    }
  }

  TEST_CASE("mutated QPs agree with brute force too") {
    const QP q = mutate_qp(qp_of_triangulation(corpus_triangulation("once-punctured-square"), 8), "g");
    const DimensionReport r = truncated_quotient_dim(q, 4);
    for (int d = 1; d <= 4; ++d) CHECK(r.rows[static_cast<std::size_t>(d)].dim == oracle::truncated_dim(q, d));
  }

  TEST_CASE("finite dimension certificates") {
    const DimensionReport hex = finite_dim_evidence(qp_of_triangulation(corpus_triangulation("hexagon"), 10), 10);
    REQUIRE(hex.certified_order.has_value());
    CHECK(*hex.dimension() == 6);
    CHECK(*hex.certified_order == 2);
    const DimensionReport pent = finite_dim_evidence(qp_of_triangulation(corpus_triangulation("pentagon"), 10), 10);
    REQUIRE(pent.certified_order.has_value());
    CHECK(*pent.dimension() == 3);
    const DimensionReport torus = truncated_quotient_dim(qp_of_triangulation(corpus_triangulation("torus"), 6), 6);
    CHECK_FALSE(torus.certified_order.has_value());
  }

  TEST_CASE("certificate means no paths survive one step further") {
    const QP q = qp_of_triangulation(corpus_triangulation("hexagon-fan"), 10);
    const DimensionReport r = truncated_quotient_dim(q, 8);
    REQUIRE(r.certified_order.has_value());
    for (int d = *r.certified_order; d <= 8; ++d) CHECK(r.rows[static_cast<std::size_t>(d)].dim == *r.dimension());
  }

  TEST_CASE("torus cyclic derivative") {
    const Triangulation t = corpus_triangulation("torus");
    const QP q = qp_of_triangulation(t, 6);
    const forms::TorusLetters l = forms::torus_letters(t);
    const AlgebraElement expected = AlgebraElement::path(q.quiver_ptr(), 6, {l.b[0], l.c[0]}) +
                                    AlgebraElement::path(q.quiver_ptr(), 6, {l.b[1], l.c[0], l.a[1], l.b[0], l.c[1]}, l.x);
    CHECK(cyclic_derivative(q.potential(), l.a[0]) == expected);
    CHECK(jacobian_generators(q).size() == 6);
  }

  TEST_CASE("rigidity") {
    const RigidityReport hex = is_rigid_up_to(qp_of_triangulation(corpus_triangulation("hexagon"), 8), 8);
    CHECK(hex.rigid);
    CHECK(hex.cycle_classes > 0);
    const RigidityReport torus = is_rigid_up_to(qp_of_triangulation(corpus_triangulation("torus"), 6), 6);
    CHECK_FALSE(torus.rigid);
    REQUIRE(torus.witness.has_value());
    CHECK(torus.witness->length() >= 3);
    const RigidityReport pent = is_rigid_up_to(qp_of_triangulation(corpus_triangulation("pentagon"), 6), 6);
    CHECK(pent.rigid);
    CHECK(pent.cycle_classes == 0);
  }

  TEST_CASE("bad orders are refused") {
    const QP q = qp_of_triangulation(corpus_triangulation("hexagon"), 4);
    CHECK_THROWS_AS((void)truncated_quotient_dim(q, 0), PreconditionError);
    CHECK_THROWS_AS((void)is_rigid_up_to(q, 0), PreconditionError);
  }
}
