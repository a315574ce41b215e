// One line per acceptance criterion; exit status 1 if any fails.
// Usage: qpsurf_acceptance [--seed N]

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>

#include "oracle.hpp"
#include "worked_forms.hpp"
#include "properties.hpp"
#include "qpsurf/corpus.hpp"
#include "qpsurf/jacobian.hpp"
#include "qpsurf/potential_builder.hpp"
#include "qpsurf/verify.hpp"

using namespace qpsurf;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

constexpr int kD = 6;

std::vector<QP> corpus_qps(int order) {
  std::vector<QP> out;
  for (const auto& e : corpus()) {
    if (e.kind == "triangulation") out.push_back(qp_of_triangulation(corpus_triangulation(e.name), order));
    else out.push_back(with_order(parse_qp(e.text), std::max(order, parse_qp(e.text).order())));
  }
  return out;
}

Verdict torus_forward() {
  const Triangulation t = corpus_triangulation("torus");
  const QP q = qp_of_triangulation(t, working_order(kD));
  const forms::TorusLetters l = forms::torus_letters(t);
  const bool ok = cyclic_normal_form(q.potential()) == forms::torus_expected(l, q.quiver_ptr(), q.order());
  return {ok, "x = " + format_rational(l.x) + ", a1 = " + l.a[0] + ", b1 = " + l.b[0] + ", c1 = " + l.c[0]};
}

Verdict torus_mutation() {
  const Triangulation t = corpus_triangulation("torus");
  const QP q = qp_of_triangulation(t, working_order(kD));
  const forms::TorusLetters l = forms::torus_letters(t);
  const std::string i = forms::torus_mutation_vertex(l, q.quiver());
  const QP m = mutate_qp(q, i);
  const bool ok = cyclic_normal_form(m.potential()) == forms::torus_mutated_expected(l, m.quiver_ptr(), m.order());
  return {ok, "i = t(b1) = " + i + ", compared through degree " + std::to_string(m.order())};
}

Verdict square_example() {
  const Triangulation t = corpus_triangulation("once-punctured-square");
  const int w = working_order(kD);
  const auto l = forms::square_letters(build_unreduced_qp(t, w));
  if (!l) return {false, "unreduced potential is not x ab + a alpha beta + gamma delta b"};
  const QP r = qp_of_triangulation(t, w);
  const bool ok = cyclic_normal_form(r.potential()) == forms::square_reduced_expected(*l, r.quiver_ptr(), w);
  std::string text = element_to_string(r.potential().element());
  while (!text.empty() && text.back() == '\n') text.pop_back();
  return {ok, "x = " + format_rational(l->x) + ", reduced " + text};
}

Verdict three_cycle() {
  const QP q = parse_qp(corpus_entry("three-cycle").text);
  const QP p = premutate_qp(q, "2");
  const std::string bc = hook_arrow_name("b", "c");
  const Potential expected(AlgebraElement::path(p.quiver_ptr(), p.order(), {"a", bc}) +
                           AlgebraElement::path(p.quiver_ptr(), p.order(), {"c*", "b*", bc}));
  const bool pre = cyclic_normal_form(p.potential()) == cyclic_normal_form(expected);
  const SplitResult s = split_qp(p);
  const Quiver expected_bar({"1", "2", "3"}, {{"b*", "3", "2"}, {"c*", "2", "1"}});
  const bool red = s.reduced.potential().is_zero() && s.reduced.quiver() == expected_bar;
  return {pre && red, std::string("premutation ") + (pre ? "ok" : "differs") + ", reduced part " + (red ? "ok" : "differs")};
}

template <class F>
Verdict over_flips(F&& f, std::string_view what) {
  int n = 0;
  for (const auto& name : corpus_triangulation_names()) {
    const Triangulation t = corpus_triangulation(name);
    for (const auto& arc : flippable_arcs(t)) {
      ++n;
      if (auto bad = f(t, arc)) return {false, name + " arc " + arc + ": " + *bad};
    }
  }
  return {true, std::to_string(n) + " " + std::string(what)};
}

Verdict flips_mutate_matrices() {
  return over_flips(
      [](const Triangulation& t, const std::string& arc) -> std::optional<std::string> {
        const FlipResult f = flip(t, arc);
        if (same_labelled_matrix(mutate_matrix(signed_adjacency(t), arc).relabeled(f.relabel),
                                 signed_adjacency(f.triangulation))) {
          return std::nullopt;
        }
        return "matrices differ";
      },
      "(triangulation, arc) pairs");
}

Verdict flip_invariants() {
  return over_flips(
      [](const Triangulation& t, const std::string& arc) -> std::optional<std::string> {
        const CheckReport r = check_flip_compatibility(t, arc, kD);
        if (r.pass) return std::nullopt;
        return r.first_failure()->name;
      },
      "flip checks at D = 6");
}

Verdict involutions() {
  int n = 0;
  for (const QP& q : corpus_qps(working_order(kD))) {
    for (const auto& k : q.quiver().vertices()) {
      ++n;
      const CheckReport r = check_involution(q, k, kD);
      if (!r.pass) return {false, "vertex " + k + ": " + r.first_failure()->name};
    }
  }
  return {true, std::to_string(n) + " (QP, vertex) pairs"};
}

Verdict restrictions() {
  int n = 0;
  int exact = 0;
  for (const QP& q : corpus_qps(working_order(kD))) {
    const auto& vs = q.quiver().vertices();
    if (vs.size() < 2) continue;
    for (const auto& drop : vs) {
      std::vector<std::string> keep;
      for (const auto& v : vs) {
        if (v != drop) keep.push_back(v);
      }
      for (const auto& k : keep) {
        ++n;
        const CheckReport r = check_restriction_commutes(q, keep, k, kD);
        if (!r.pass) return {false, "drop " + drop + " at " + k + ": " + r.first_failure()->name};
        for (const auto& s : r.results) exact += s.informational && s.pass;
      }
    }
  }
  return {true, std::to_string(n) + " cases, " + std::to_string(exact) + " with identical mutated QPs"};
}

Verdict rigidity() {
  const RigidityReport hex = is_rigid_up_to(qp_of_triangulation(corpus_triangulation("hexagon"), 8), 8);
  const RigidityReport torus = is_rigid_up_to(qp_of_triangulation(corpus_triangulation("torus"), kD), kD);
  return {hex.rigid && !torus.rigid, std::string("hexagon ") + (hex.rigid ? "rigid up to 8" : "not rigid") +
                                         ", torus witness " + (torus.rigid ? "none" : torus.witness_text)};
}

Verdict finite_dimension() {
  std::string detail;
  bool ok = true;
  for (const auto& name : corpus_triangulation_names()) {
    const Triangulation t = corpus_triangulation(name);
    if (t.surface().puncture_count() != 0) continue;
    const QP q = qp_of_triangulation(t, 10);
    const DimensionReport r = finite_dim_evidence(q, 10);
    if (!r.certified_order) return {false, name + " not stabilized by order 10"};
    // The oracle must see the same dimension once paths one step longer are included.
    const int d = std::min(*r.certified_order + 1, 5);
    const std::size_t brute = oracle::truncated_dim(q, d);
    if (brute != *r.dimension()) {
      ok = false;
      detail += name + ": oracle " + std::to_string(brute) + " vs " + std::to_string(*r.dimension()) + "; ";
    }
    detail += name + " " + std::to_string(*r.dimension()) + "@" + std::to_string(*r.certified_order) + " ";
    if (name == "hexagon" && *r.dimension() != 6) ok = false;
    if (name == "pentagon" && *r.dimension() != 3) ok = false;
  }
  return {ok, detail};
}

Verdict nondegeneracy() {
  const ExploreResult r = explore_mutation_class(qp_of_triangulation(corpus_triangulation("torus"), kD), 4, kD);
  return {r.report.pass, r.report.results.front().detail};
}

Verdict structural(std::uint64_t seed) {
  const props::Outcome o = props::run(seed, 1000);
  long long worst = 0;
  bool skew = true;
  for (const auto& name : corpus_triangulation_names()) {
    const IntegerMatrix b = signed_adjacency(corpus_triangulation(name));
    skew = skew && b.is_skew_symmetric();
    worst = std::max(worst, b.max_abs_entry());
  }
  return {o.failures == 0 && skew && worst <= 2,
          std::to_string(o.triples) + " triples (seed " + std::to_string(seed) + "), " + std::to_string(o.failures) +
              " failures" + (o.first_failure.empty() ? "" : " [" + o.first_failure + "]") +
              ", max |b_ij| = " + std::to_string(worst)};
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 20240611ULL;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::cerr << "usage: qpsurf_acceptance [--seed N]\n";
      return 2;
    }
  }
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"torus potential (worked example, forward)", torus_forward},
      {"torus mutation at t(b1)", torus_mutation},
      {"once-punctured square: unreduced and reduced potentials", square_example},
      {"3-cycle premutation and split", three_cycle},
      {"flips realise matrix mutation", flips_mutate_matrices},
      {"flip compatibility invariants", flip_invariants},
      {"mutation is an involution", involutions},
      {"restriction commutes with mutation", restrictions},
      {"rigidity split", rigidity},
      {"finite dimension certificates", finite_dimension},
      {"non-degeneracy probe", nondegeneracy},
      {"structural invariants", [seed] { return structural(seed); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    failed += v.pass ? 0 : 1;
    std::cout << "criterion " << std::setw(2) << (i + 1) << ": " << (v.pass ? "PASS" : "FAIL") << "  "
              << criteria[i].first << "  (" << v.detail << "; " << std::fixed << std::setprecision(0) << ms
              << " ms)\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
