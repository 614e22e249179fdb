#pragma once

#include <cstddef>
#include <vector>

#include "svtakagi/exactgeom/rational.hpp"

namespace svtakagi::exactgeom {

/// Basis of {x : M x = 0} for an r x dim matrix given as rows.
inline std::vector<RationalVector> null_space(std::vector<RationalVector> rows, std::size_t dim) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Rational inv = 1 / rows[r][c];
    rows[r] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      rows[i] -= f * rows[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(dim, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(dim);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -rows[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::size_t rank(const std::vector<RationalVector>& rows, std::size_t dim) {
  return dim - null_space(rows, dim).size();
}

}  // namespace svtakagi::exactgeom
