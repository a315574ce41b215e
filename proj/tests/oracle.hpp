// Brute-force reference computations, kept independent of the jacobian and
// sparse_rank modules: own path enumeration, own cyclic derivatives, own
// dense elimination.
#ifndef QPSURF_TESTS_ORACLE_HPP
#define QPSURF_TESTS_ORACLE_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "qpsurf/qp.hpp"

namespace oracle {

using Word = std::vector<std::size_t>;  // arrow indices, composed as functions
using qpsurf::Rational;

struct OPath {
  Word word;
  std::size_t vertex;  // for the empty word
  bool operator<(const OPath& o) const { return word != o.word ? word < o.word : vertex < o.vertex; }
};

inline std::size_t head(const qpsurf::Quiver& q, const OPath& p) {
  return p.word.empty() ? p.vertex : q.arrow(p.word.front()).head;
}
inline std::size_t tail(const qpsurf::Quiver& q, const OPath& p) {
  return p.word.empty() ? p.vertex : q.arrow(p.word.back()).tail;
}

// Depth-first: extend on the right by any arrow whose head is the current tail.
inline void extend(const qpsurf::Quiver& q, OPath p, int left, std::vector<OPath>& out) {
  out.push_back(p);
  if (left == 0) return;
  const std::size_t at = tail(q, p);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    if (q.arrow(a).head != at) continue;
    OPath r = p;
    r.word.push_back(a);
    extend(q, r, left - 1, out);
  }
}

inline std::vector<OPath> all_paths(const qpsurf::Quiver& q, int max_len) {
  std::vector<OPath> out;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) extend(q, OPath{{}, v}, max_len, out);
  return out;
}

using Poly = std::map<OPath, Rational>;

inline Poly derivative(const qpsurf::QP& s, std::size_t a) {
  Poly d;
  const qpsurf::Quiver& q = s.quiver();
  for (const auto& [p, c] : s.potential().element().terms()) {
    const std::size_t n = p.arrows.size();
    for (std::size_t j = 0; j < n; ++j) {
      if (p.arrows[j] != a) continue;
      OPath r{{}, q.arrow(a).tail};
      for (std::size_t i = 1; i < n; ++i) r.word.push_back(p.arrows[(j + i) % n]);
      d[r] += c;
    }
  }
  return d;
}

inline std::size_t rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

/// dim of the path algebra modulo (Jacobian ideal + paths longer than d).
inline std::size_t truncated_dim(const qpsurf::QP& s, int d) {
  const qpsurf::Quiver& q = s.quiver();
  const std::vector<OPath> paths = all_paths(q, d);
  std::map<OPath, std::size_t> col;
  for (std::size_t i = 0; i < paths.size(); ++i) col[paths[i]] = i;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Poly g = derivative(s, a);
    if (g.empty()) continue;
    // d_a runs from h(a) to t(a): pre ends at t(a), suf starts at h(a).
    for (const auto& pre : paths) {
      if (tail(q, pre) != q.arrow(a).tail) continue;
      for (const auto& suf : paths) {
        if (head(q, suf) != q.arrow(a).head) continue;
        std::vector<Rational> row(paths.size());
        bool any = false;
        for (const auto& [w, c] : g) {
          OPath r{pre.word, pre.vertex};
          r.word.insert(r.word.end(), w.word.begin(), w.word.end());
          r.word.insert(r.word.end(), suf.word.begin(), suf.word.end());
          if (static_cast<int>(r.word.size()) > d) continue;
          r.vertex = r.word.empty() ? pre.vertex : q.arrow(r.word.front()).head;
          if (auto it = col.find(r); it != col.end()) {
            row[it->second] += c;
            any = true;
          }
        }
        if (any) rows.push_back(std::move(row));
      }
    }
  }
  return paths.size() - rank(std::move(rows));
}

}  // namespace oracle

#endif  // QPSURF_TESTS_ORACLE_HPP
