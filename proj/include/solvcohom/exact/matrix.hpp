#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "solvcohom/exact/gaussian_rational.hpp"

namespace solvcohom {

using Vector = std::vector<GaussianRational>;

/// Dense row-major matrix over Q(i).
class ExactMatrix {
public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(const Vector& d);
  static ExactMatrix from_rows(const std::vector<Vector>& rows);
  static ExactMatrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_diagonal() const;
  std::size_t nonzeros() const;

  ExactMatrix transpose() const;
  Vector apply(const Vector& v) const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const GaussianRational& s);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const GaussianRational& s, ExactMatrix a) { return a *= s; }

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix power(const ExactMatrix& m, std::size_t k);
bool is_nilpotent(const ExactMatrix& m);
bool is_zero_vector(const Vector& v);

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m);

}  // namespace solvcohom
