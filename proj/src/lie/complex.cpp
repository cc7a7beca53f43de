#include "solvcohom/lie/complex.hpp"

#include <numeric>

#include "solvcohom/errors.hpp"
#include "solvcohom/exact/linalg.hpp"

namespace solvcohom {

std::size_t FiniteComplex::total_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

void check_complex(const FiniteComplex& c) {
  if (c.dims.empty()) throw ComplexError(0, "complex has no degrees");
  if (c.differentials.size() + 1 != c.dims.size())
    throw ComplexError(0, "expected " + std::to_string(c.dims.size() - 1) + " differentials");
  for (std::size_t p = 0; p < c.differentials.size(); ++p) {
    const auto& d = c.differentials[p];
    if (d.cols() != c.dims[p] || d.rows() != c.dims[p + 1])
      throw ComplexError(p, "differential has shape " + std::to_string(d.rows()) + "x" + std::to_string(d.cols()));
  }
  for (std::size_t p = 0; p + 1 < c.differentials.size(); ++p) {
    if (!(c.differentials[p + 1] * c.differentials[p]).is_zero()) throw ComplexError(p, "d o d != 0");
  }
}

CohomologyResult cohomology(const FiniteComplex& c) {
  check_complex(c);
  CohomologyResult out;
  const std::size_t top = c.top_degree();
  out.betti.resize(top + 1);
  out.representatives.resize(top + 1);

  for (std::size_t p = 0; p <= top; ++p) {
    std::vector<Vector> cocycles;
    if (p < c.differentials.size()) {
      cocycles = rank_and_kernel(c.differentials[p]).kernel_basis;
    } else {
      for (std::size_t k = 0; k < c.dims[p]; ++k) {
        Vector e(c.dims[p]);
        e[k] = 1;
        cocycles.push_back(std::move(e));
      }
    }

    EchelonBasis span(c.dims[p]);
    if (p > 0) {
      const auto& d = c.differentials[p - 1];
      for (std::size_t col = 0; col < d.cols(); ++col) span.insert(d.column(col));
    }
    const std::size_t boundaries = span.size();
    for (auto& z : cocycles)
      if (span.insert(z)) out.representatives[p].push_back(z);

    out.betti[p] = cocycles.size() - boundaries;
    if (out.representatives[p].size() != out.betti[p])
      throw ComplexError(p, "boundaries are not contained in the cocycles");
  }
  return out;
}

long euler_characteristic(const std::vector<std::size_t>& dims) {
  long chi = 0;
  for (std::size_t p = 0; p < dims.size(); ++p) chi += (p % 2 == 0 ? 1L : -1L) * static_cast<long>(dims[p]);
  return chi;
}

FiniteComplex restrict_complex(const FiniteComplex& c, const std::vector<std::vector<bool>>& keep) {
  if (keep.size() != c.dims.size()) throw ComplexError(0, "selection has the wrong number of degrees");
  std::vector<std::vector<std::size_t>> kept(c.dims.size());
  for (std::size_t p = 0; p < c.dims.size(); ++p) {
    if (keep[p].size() != c.dims[p]) throw ComplexError(p, "selection has the wrong length");
    for (std::size_t k = 0; k < c.dims[p]; ++k)
      if (keep[p][k]) kept[p].push_back(k);
  }

  FiniteComplex out;
  for (std::size_t p = 0; p < c.dims.size(); ++p) {
    out.dims.push_back(kept[p].size());
    std::vector<std::string> labels;
    if (p < c.labels.size())
      for (auto k : kept[p]) labels.push_back(c.labels[p][k]);
    out.labels.push_back(std::move(labels));
  }
  for (std::size_t p = 0; p < c.differentials.size(); ++p) {
    const auto& d = c.differentials[p];
    for (auto col : kept[p])
      for (std::size_t row = 0; row < d.rows(); ++row)
        if (!keep[p + 1][row] && !d(row, col).is_zero())
          throw ComplexError(p, "selection is not closed under the differential");
    ExactMatrix r(kept[p + 1].size(), kept[p].size());
    for (std::size_t i = 0; i < kept[p + 1].size(); ++i)
      for (std::size_t j = 0; j < kept[p].size(); ++j) r(i, j) = d(kept[p + 1][i], kept[p][j]);
    out.differentials.push_back(std::move(r));
  }
  return out;
}

FiniteComplex zero_complex(const std::vector<std::size_t>& dims) {
  FiniteComplex c;
  c.dims = dims;
  for (std::size_t p = 0; p + 1 < dims.size(); ++p) c.differentials.emplace_back(dims[p + 1], dims[p]);
  c.labels.resize(dims.size());
  return c;
}

}  // namespace solvcohom
