#include "solvcohom/exact/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace solvcohom {

namespace {

using Rows = std::vector<Vector>;

Rows to_rows(const ExactMatrix& m) {
  Rows rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows[r] = m.row(r);
  return rows;
}

std::size_t count_nonzero(const Vector& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const auto& z) { return !z.is_zero(); }));
}

// target -= factor * pivot_row, touching only the pivot row's support.
void eliminate(Vector& target, const Vector& pivot_row, const std::vector<std::size_t>& support,
               const GaussianRational& factor) {
  for (std::size_t c : support) target[c] -= factor * pivot_row[c];
}

std::vector<std::size_t> support_of(const Vector& v) {
  std::vector<std::size_t> s;
  for (std::size_t c = 0; c < v.size(); ++c)
    if (!v[c].is_zero()) s.push_back(c);
  return s;
}

// Reduces rows to reduced row-echelon form in place; returns pivot columns
// (pivot k sits in row k).
std::vector<std::size_t> reduce_to_rref(Rows& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t best = rows.size();
    std::size_t best_count = 0;
    for (std::size_t r = next; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      std::size_t count = count_nonzero(rows[r]);
      if (best == rows.size() || count < best_count) {
        best = r;
        best_count = count;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[next], rows[best]);

    Vector& pivot_row = rows[next];
    if (!pivot_row[c].is_one()) {
      GaussianRational inv = GaussianRational(1) / pivot_row[c];
      for (auto& z : pivot_row)
        if (!z.is_zero()) z *= inv;
    }
    auto support = support_of(pivot_row);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][c].is_zero()) continue;
      GaussianRational factor = rows[r][c];
      eliminate(rows[r], pivot_row, support, factor);
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

}  // namespace

RankKernel rank_and_kernel(const ExactMatrix& m) {
  Rows rows = to_rows(m);
  auto pivots = reduce_to_rref(rows, m.cols());

  RankKernel out;
  out.rank = pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      const auto& z = rows[k][free];
      if (!z.is_zero()) v[pivots[k]] = -z;
    }
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const ExactMatrix& m, PivotOrder order) {
  if (order == PivotOrder::sparsest_row) {
    Rows rows = to_rows(m);
    return reduce_to_rref(rows, m.cols()).size();
  }

  // Plain forward elimination, scanning columns from the right.
  Rows rows = to_rows(m);
  std::size_t next = 0;
  for (std::size_t cc = m.cols(); cc-- > 0 && next < rows.size();) {
    std::size_t r = next;
    while (r < rows.size() && rows[r][cc].is_zero()) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[next], rows[r]);
    const Vector& pivot_row = rows[next];
    auto support = support_of(pivot_row);
    for (std::size_t k = next + 1; k < rows.size(); ++k) {
      if (rows[k][cc].is_zero()) continue;
      GaussianRational factor = rows[k][cc] / pivot_row[cc];
      eliminate(rows[k], pivot_row, support, factor);
    }
    ++next;
  }
  return next;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Rows rows(n);
  for (std::size_t r = 0; r < n; ++r) {
    rows[r] = m.row(r);
    rows[r].resize(2 * n);
    rows[r][n + r] = 1;
  }
  auto pivots = reduce_to_rref(rows, n);
  if (pivots.size() != n) return std::nullopt;
  ExactMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rows[r][n + c];
  return inv;
}

void EchelonBasis::reduce(Vector& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const auto& z = v[pivots_[k]];
    if (z.is_zero()) continue;
    GaussianRational factor = z;
    for (std::size_t c = 0; c < ambient_; ++c)
      if (!rows_[k][c].is_zero()) v[c] -= factor * rows_[k][c];
  }
}

bool EchelonBasis::insert(Vector v) {
  if (v.size() != ambient_) throw std::invalid_argument("echelon basis: wrong vector length");
  reduce(v);
  auto it = std::find_if(v.begin(), v.end(), [](const auto& z) { return !z.is_zero(); });
  if (it == v.end()) return false;
  std::size_t pivot = static_cast<std::size_t>(it - v.begin());
  GaussianRational inv = GaussianRational(1) / v[pivot];
  for (auto& z : v)
    if (!z.is_zero()) z *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool EchelonBasis::contains(Vector v) const {
  if (v.size() != ambient_) throw std::invalid_argument("echelon basis: wrong vector length");
  reduce(v);
  return is_zero_vector(v);
}

}  // namespace solvcohom
