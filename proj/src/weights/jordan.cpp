#include "solvcohom/weights/jordan.hpp"

#include <algorithm>
#include <stdexcept>

#include "solvcohom/errors.hpp"
#include "solvcohom/exact/linalg.hpp"
#include "solvcohom/exact/polynomial.hpp"

namespace solvcohom {

namespace {

ExactMatrix semisimple_by_newton(const ExactMatrix& m, const Polynomial& squarefree) {
  const Polynomial dq = squarefree.derivative();
  ExactMatrix s = m;
  for (std::size_t iter = 0; iter <= m.rows() + 1; ++iter) {
    ExactMatrix qs = squarefree(s);
    if (qs.is_zero()) return s;
    auto inv = inverse(dq(s));
    if (!inv) throw std::logic_error("Newton step for the semisimple part hit a singular q'(S)");
    s -= qs * *inv;
  }
  throw std::logic_error("Newton iteration for the semisimple part did not converge");
}

ExactMatrix semisimple_by_eigenspaces(const ExactMatrix& m,
                                      const std::vector<std::pair<GaussianRational, std::size_t>>& eigenvalues) {
  const std::size_t n = m.rows();
  std::vector<Vector> columns;
  Vector diagonal;
  for (const auto& [root, mult] : eigenvalues) {
    ExactMatrix shifted = m - root * ExactMatrix::identity(n);
    auto basis = rank_and_kernel(power(shifted, mult)).kernel_basis;
    if (basis.size() != mult) throw std::logic_error("generalized eigenspace dimension != multiplicity");
    for (auto& v : basis) {
      columns.push_back(std::move(v));
      diagonal.push_back(root);
    }
  }
  ExactMatrix t = ExactMatrix::from_columns(n, columns);
  auto t_inv = inverse(t);
  if (!t_inv) throw std::logic_error("generalized eigenspaces do not span");
  return t * ExactMatrix::diagonal(diagonal) * *t_inv;
}

}  // namespace

JordanDecomposition jordan_chevalley_additive(const ExactMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("Jordan decomposition of a non-square matrix");
  JordanDecomposition out;
  if (m.rows() == 0) return out;

  Polynomial chi = characteristic_polynomial(m);
  RootSplit split = roots_in_gaussian_rationals(chi);
  if (split.remainder.degree() > 0) throw ExtendScalarsError(split.remainder.to_string());
  out.eigenvalues = std::move(split.roots);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
            [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });

  ExactMatrix s = semisimple_by_newton(m, squarefree_part(chi));
  if (!(s == semisimple_by_eigenspaces(m, out.eigenvalues)))
    throw std::logic_error("semisimple part differs between Newton and eigenprojection routes");

  out.nilpotent = m - s;
  out.semisimple = std::move(s);
  if (!commutator(out.semisimple, out.nilpotent).is_zero() || !is_nilpotent(out.nilpotent))
    throw std::logic_error("Jordan decomposition failed its own checks");
  return out;
}

}  // namespace solvcohom
