#pragma once

#include <string>
#include <vector>

#include "solvcohom/exact/gaussian_rational.hpp"
#include "solvcohom/lie/algebra.hpp"

namespace solvcohom {

/// Additive character lambda (alpha = e^lambda) on g, stored by its values on
/// the complement basis vectors. It vanishes on the nilradical.
class Weight {
public:
  Weight() = default;
  explicit Weight(std::vector<GaussianRational> coords) : coords_(std::move(coords)) {}
  static Weight zero(std::size_t rank) { return Weight(std::vector<GaussianRational>(rank)); }

  std::size_t size() const { return coords_.size(); }
  const GaussianRational& operator[](std::size_t j) const { return coords_[j]; }
  const std::vector<GaussianRational>& coords() const { return coords_; }

  bool is_zero() const;

  /// lambda(X_index) for a basis vector of g. A weight with no coordinates
  /// is read as zero.
  GaussianRational at_basis(const LieAlgebraData& g, std::size_t index) const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend bool operator<(const Weight& a, const Weight& b);

  std::string to_string() const;

private:
  std::vector<GaussianRational> coords_;
};

}  // namespace solvcohom
