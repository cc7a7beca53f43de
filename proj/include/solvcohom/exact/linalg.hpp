#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "solvcohom/exact/matrix.hpp"

namespace solvcohom {

struct RankKernel {
  std::size_t rank = 0;
  std::vector<Vector> kernel_basis;  // rank + kernel_basis.size() == cols
};

/// Exact Gauss-Jordan elimination. Pivot rows are chosen sparsest-first
/// within each column, which keeps fill-in low on CE differentials.
RankKernel rank_and_kernel(const ExactMatrix& m);

enum class PivotOrder {
  sparsest_row,              // columns left to right, sparsest eligible row
  reversed_first_nonzero,    // columns right to left, first eligible row
};

std::size_t rank(const ExactMatrix& m, PivotOrder order = PivotOrder::sparsest_row);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<ExactMatrix> inverse(const ExactMatrix& m);

/// Incrementally built row-echelon basis of a subspace of Q(i)^n.
class EchelonBasis {
public:
  explicit EchelonBasis(std::size_t ambient) : ambient_(ambient) {}

  /// Adds v if it is independent of what is already stored.
  bool insert(Vector v);
  bool contains(Vector v) const;
  std::size_t size() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }

private:
  void reduce(Vector& v) const;

  std::size_t ambient_;
  std::vector<Vector> rows_;         // each normalized so that rows_[k][pivots_[k]] == 1
  std::vector<std::size_t> pivots_;
};

}  // namespace solvcohom
