#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "svtakagi/exactgeom/rational.hpp"

namespace svtakagi::exactgeom {

/// Standard-form linear program: minimize c.x subject to A x = b, x >= 0.
struct LinearProgram {
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  std::vector<Rational> c;  // empty means pure feasibility
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> x;
};

namespace detail {

// Dense two-phase tableau. Bland's rule throughout: entering column is the
// lowest index with negative reduced cost, leaving row the lowest basic index
// among ratio-test ties. This terminates without cycling.
class Tableau {
 public:
  Tableau(const LinearProgram& lp, std::size_t n)
      : n_(n), m_(lp.b.size()), width_(n + m_ + 1), rows_(m_, std::vector<Rational>(width_)), basis_(m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = lp.b[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = flip ? Rational(-lp.A[i][j]) : lp.A[i][j];
      rows_[i][n_ + i] = 1;
      rows_[i][width_ - 1] = flip ? Rational(-lp.b[i]) : lp.b[i];
      basis_[i] = n_ + i;
    }
  }

  // Returns false when the phase-1 optimum is positive.
  bool phase_one() {
    obj_.assign(width_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) obj_[j] -= rows_[i][j];
      obj_[width_ - 1] -= rows_[i][width_ - 1];
    }
    iterate(n_ + m_);
    if (obj_[width_ - 1] != 0) return false;
    drive_out_artificials();
    return true;
  }

  LpStatus phase_two(const std::vector<Rational>& c) {
    obj_.assign(width_, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) obj_[j] = c[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = c[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < width_; ++j) obj_[j] -= cb * rows_[i][j];
    }
    return iterate(n_) ? LpStatus::optimal : LpStatus::unbounded;
  }

  Rational value() const { return -obj_[width_ - 1]; }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(n_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < n_) x[basis_[i]] = rows_[i][width_ - 1];
    return x;
  }

 private:
  // Returns false on an unbounded direction.
  bool iterate(std::size_t allowed_cols) {
    for (;;) {
      std::size_t enter = allowed_cols;
      for (std::size_t j = 0; j < allowed_cols; ++j)
        if (obj_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == allowed_cols) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rational ratio = rows_[i][width_ - 1] / rows_[i][enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational p = rows_[r][c];
    for (auto& v : rows_[r]) v /= p;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      Rational f = rows_[i][c];
      for (std::size_t j = 0; j < width_; ++j) rows_[i][j] -= f * rows_[r][j];
    }
    if (obj_[c] != 0) {
      Rational f = obj_[c];
      for (std::size_t j = 0; j < width_; ++j) obj_[j] -= f * rows_[r][j];
    }
    basis_[r] = c;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      std::size_t col = n_;
      for (std::size_t j = 0; j < n_; ++j)
        if (rows_[i][j] != 0) {
          col = j;
          break;
        }
      if (col < n_) {
        pivot(i, col);
        ++i;
      } else {  // redundant equality
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::size_t n_, m_, width_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> obj_;
};

}  // namespace detail

/// Exact two-phase simplex. All arithmetic is rational; no tolerances.
inline LpResult solve(const LinearProgram& lp) {
  const std::size_t m = lp.b.size();
  if (lp.A.size() != m) throw DimensionError("linear program: row count mismatch");
  const std::size_t n = m ? lp.A.front().size() : lp.c.size();
  for (const auto& row : lp.A)
    if (row.size() != n) throw DimensionError("linear program: ragged constraint matrix");
  if (!lp.c.empty() && lp.c.size() != n) throw DimensionError("linear program: cost length mismatch");

  detail::Tableau tab(lp, n);
  LpResult out;
  if (!tab.phase_one()) return out;
  if (lp.c.empty()) {
    out.status = LpStatus::optimal;
    out.value = 0;
    out.x = tab.solution();
    return out;
  }
  out.status = tab.phase_two(lp.c);
  if (out.status == LpStatus::optimal) {
    out.value = tab.value();
    out.x = tab.solution();
  }
  return out;
}

inline bool feasible(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b) {
  return solve(LinearProgram{A, b, {}}).status != LpStatus::infeasible;
}

}  // namespace svtakagi::exactgeom
