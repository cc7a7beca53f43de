#include "solvcohom/exact/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace solvcohom {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(const Vector& d) {
  ExactMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  ExactMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ExactMatrix ExactMatrix::from_columns(std::size_t rows, const std::vector<Vector>& cols) {
  ExactMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector ExactMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector ExactMatrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const auto& z) { return z.is_zero(); });
}

bool ExactMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && !(*this)(r, c).is_zero()) return false;
  return true;
}

std::size_t ExactMatrix::nonzeros() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const auto& z) { return !z.is_zero(); }));
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector ExactMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const auto& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const GaussianRational& s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const auto& y = b(k, c);
        if (!y.is_zero()) out(r, c) += x * y;
      }
    }
  }
  return out;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

ExactMatrix power(const ExactMatrix& m, std::size_t k) {
  if (!m.is_square()) throw std::invalid_argument("power of a non-square matrix");
  ExactMatrix result = ExactMatrix::identity(m.rows());
  ExactMatrix base = m;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

bool is_nilpotent(const ExactMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("nilpotency of a non-square matrix");
  ExactMatrix p = m;
  for (std::size_t step = 1; step < m.rows(); ++step) {
    if (p.is_zero()) return true;
    p = p * m;
  }
  return p.is_zero();
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& z) { return z.is_zero(); });
}

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << "]\n";
  }
  return os;
}

}  // namespace solvcohom
