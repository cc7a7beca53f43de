#include "solvcohom/lie/multi_index.hpp"

#include <stdexcept>

namespace solvcohom {

std::vector<std::size_t> elements(IndexSet s) {
  std::vector<std::size_t> out;
  while (s) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void enumerate(std::size_t n, std::size_t p, std::size_t start, IndexSet current, std::vector<IndexSet>& out) {
  if (p == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = start; i + p <= n; ++i) enumerate(n, p - 1, i + 1, current | singleton(i), out);
}

}  // namespace

SubsetBasis::SubsetBasis(std::size_t n, std::size_t p) {
  if (n > 63) throw std::invalid_argument("at most 63 basis vectors are supported");
  if (p <= n) enumerate(n, p, 0, 0, subsets_);
  position_.reserve(subsets_.size());
  for (std::size_t k = 0; k < subsets_.size(); ++k) position_.emplace(subsets_[k], k);
}

}  // namespace solvcohom
