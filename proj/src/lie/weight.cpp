#include "solvcohom/lie/weight.hpp"

#include <algorithm>
#include <stdexcept>

namespace solvcohom {

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const auto& z) { return z.is_zero(); });
}

GaussianRational Weight::at_basis(const LieAlgebraData& g, std::size_t index) const {
  auto pos = g.complement_position(index);
  if (!pos || coords_.empty()) return {};
  return coords_.at(*pos);
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.size() != size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t j = 0; j < size(); ++j) coords_[j] += o.coords_[j];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.size() != size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t j = 0; j < size(); ++j) coords_[j] -= o.coords_[j];
  return *this;
}

Weight Weight::operator-() const {
  Weight out = *this;
  for (auto& z : out.coords_) z = -z;
  return out;
}

bool operator<(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t j = 0; j < a.size(); ++j)
    if (int c = compare(a[j], b[j]); c != 0) return c < 0;
  return false;
}

std::string Weight::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < coords_.size(); ++j) out += (j ? ", " : "") + coords_[j].to_string();
  return out + ")";
}

}  // namespace solvcohom
