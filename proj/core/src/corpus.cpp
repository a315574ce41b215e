#include "qpsurf/corpus.hpp"

#include "qpsurf/error.hpp"

namespace qpsurf {

// Polygon vertices are numbered counter-clockwise, so the triangle with
// vertices p, q, r in that order is written with sides (rp, qr, pq).
const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"torus", "triangulation", "once-punctured torus, two triangles glued along three loops",
       R"(surface genus=1 boundary=0
marked p puncture scalar=2/1
arc 1 p p
arc 2 p p
arc 3 p p
tri 1 2 3
tri 1 2 3
)"},
      {"once-punctured-square", "triangulation",
       "once-punctured square; the puncture meets two arcs (valence 2)",
       R"(surface genus=0 boundary=1
marked 1 boundary=1
marked 2 boundary=1
marked 3 boundary=1
marked 4 boundary=1
marked p puncture scalar=2/1
bseg s12 1 2 on=1
bseg s23 2 3 on=1
bseg s34 3 4 on=1
bseg s41 4 1 on=1
arc g 1 3
arc h 1 3
arc e1 1 p
arc e3 3 p
tri g s23 s12
tri h s41 s34
tri e1 e3 g
tri h e3 e1
)"},
      {"once-punctured-square-star", "triangulation", "once-punctured square; the puncture meets all four corners",
       R"(surface genus=0 boundary=1
marked 1 boundary=1
marked 2 boundary=1
marked 3 boundary=1
marked 4 boundary=1
marked p puncture scalar=2/1
bseg s12 1 2 on=1
bseg s23 2 3 on=1
bseg s34 3 4 on=1
bseg s41 4 1 on=1
arc e1 1 p
arc e2 2 p
arc e3 3 p
arc e4 4 p
tri e1 e2 s12
tri e2 e3 s23
tri e3 e4 s34
tri e4 e1 s41
)"},
      {"once-punctured-square-diagonal", "triangulation",
       "once-punctured square; a diagonal and a puncture of valence 3",
       R"(surface genus=0 boundary=1
marked 1 boundary=1
marked 2 boundary=1
marked 3 boundary=1
marked 4 boundary=1
marked p puncture scalar=2/1
bseg s12 1 2 on=1
bseg s23 2 3 on=1
bseg s34 3 4 on=1
bseg s41 4 1 on=1
arc d13 1 3
arc e1 1 p
arc e3 3 p
arc e4 4 p
tri d13 s23 s12
tri e1 e3 d13
tri e3 e4 s34
tri e4 e1 s41
)"},
      {"once-punctured-square-loop", "triangulation",
       "once-punctured square; the puncture is enclosed by a self-folded triangle",
       R"(surface genus=0 boundary=1
marked 1 boundary=1
marked 2 boundary=1
marked 3 boundary=1
marked 4 boundary=1
marked p puncture scalar=2/1
bseg s12 1 2 on=1
bseg s23 2 3 on=1
bseg s34 3 4 on=1
bseg s41 4 1 on=1
arc g 1 3
arc h 1 3
arc l 1 1
arc f 1 p
tri g s23 s12
tri h s41 s34
tri l h g
tri f f l
)"},
      {"hexagon", "triangulation", "unpunctured hexagon with a central interior triangle",
       R"(surface genus=0 boundary=1
marked 1 boundary=1
marked 2 boundary=1
marked 3 boundary=1
marked 4 boundary=1
marked 5 boundary=1
marked 6 boundary=1
bseg s12 1 2 on=1
bseg s23 2 3 on=1
bseg s34 3 4 on=1
bseg s45 4 5 on=1
bseg s56 5 6 on=1
bseg s61 6 1 on=1
arc d13 1 3
arc d35 3 5
arc d15 1 5
tri d13 s23 s12
tri d35 s45 s34
tri d15 s61 s56
tri d15 d35 d13
)"},
      {"hexagon-fan", "triangulation", "unpunctured hexagon, all diagonals from one vertex",
       R"(surface genus=0 boundary=1
marked 1 boundary=1
marked 2 boundary=1
marked 3 boundary=1
marked 4 boundary=1
marked 5 boundary=1
marked 6 boundary=1
bseg s12 1 2 on=1
bseg s23 2 3 on=1
bseg s34 3 4 on=1
bseg s45 4 5 on=1
bseg s56 5 6 on=1
bseg s61 6 1 on=1
arc d13 1 3
arc d14 1 4
arc d15 1 5
tri d13 s23 s12
tri d14 s34 d13
tri d15 s45 d14
tri s61 s56 d15
)"},
      {"pentagon", "triangulation", "unpunctured pentagon, diagonals from one vertex",
       R"(surface genus=0 boundary=1
marked 1 boundary=1
marked 2 boundary=1
marked 3 boundary=1
marked 4 boundary=1
marked 5 boundary=1
bseg s12 1 2 on=1
bseg s23 2 3 on=1
bseg s34 3 4 on=1
bseg s45 4 5 on=1
bseg s51 5 1 on=1
arc d13 1 3
arc d14 1 4
tri d13 s23 s12
tri d14 s34 d13
tri s51 s45 d14
)"},
      {"annulus", "triangulation", "annulus with one marked point on each boundary circle",
       R"(surface genus=0 boundary=2
marked m1 boundary=1
marked m2 boundary=2
bseg s1 m1 m1 on=1
bseg s2 m2 m2 on=2
arc e m1 m2
arc e' m1 m2
tri e' e s1
tri e s2 e'
)"},
      {"three-cycle", "qp", "3-cycle a b c through vertex 2 with potential abc",
       R"(truncation: 6
v 1
v 2
v 3
a a 3 1
a b 2 3
a c 1 2
potential:
1/1 a b c
)"},
  };
  return entries;
}

const CorpusEntry& corpus_entry(std::string_view name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return e;
  }
  throw PreconditionError("unknown example '" + std::string(name) + "'");
}

Triangulation corpus_triangulation(std::string_view name) {
  const CorpusEntry& e = corpus_entry(name);
  if (e.kind != "triangulation") throw PreconditionError("example '" + e.name + "' is not a triangulation");
  return parse_triangulation(e.text);
}

std::vector<std::string> corpus_triangulation_names() {
  std::vector<std::string> names;
  for (const auto& e : corpus()) {
    if (e.kind == "triangulation") names.push_back(e.name);
  }
  return names;
}

}  // namespace qpsurf
