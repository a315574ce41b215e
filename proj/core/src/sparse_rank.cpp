#include "qpsurf/sparse_rank.hpp"

namespace qpsurf {

SparseVector RowEchelon::reduce(const SparseVector& v) const {
  std::map<std::uint32_t, Rational> work;
  for (const auto& [c, x] : v) {
    if (x != 0) work[c] += x;
  }
  auto it = work.begin();
  while (it != work.end()) {
    if (it->second == 0) {
      it = work.erase(it);
      continue;
    }
    const auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const std::uint32_t col = it->first;
    const Rational f = it->second;
    for (const auto& [c, x] : row->second) {
      auto [pos, inserted] = work.try_emplace(c, 0);
      pos->second -= f * x;
    }
    // Entries left of `col` are untouched; resume there.
    it = work.lower_bound(col);
  }
  SparseVector out;
  for (auto& [c, x] : work) {
    if (x != 0) out.emplace_back(c, std::move(x));
  }
  return out;
}

bool RowEchelon::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  const Rational lead = r.front().second;
  for (auto& [c, x] : r) x /= lead;
  const std::uint32_t pivot = r.front().first;
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::vector<std::uint32_t> RowEchelon::pivot_columns() const {
  std::vector<std::uint32_t> out;
  for (const auto& [c, row] : rows_) out.push_back(c);
  return out;
}

std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[rank][col];
      for (std::size_t k = col; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace qpsurf
