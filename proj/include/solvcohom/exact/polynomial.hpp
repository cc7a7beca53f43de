#pragma once

#include <string>
#include <utility>
#include <vector>

#include "solvcohom/exact/gaussian_rational.hpp"
#include "solvcohom/exact/matrix.hpp"

namespace solvcohom {

/// Univariate polynomial over Q(i); coefficients stored lowest degree first,
/// with no trailing zeros (the zero polynomial is empty).
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<GaussianRational> coeffs);

  static Polynomial linear_root(const GaussianRational& root);  // t - root

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  const GaussianRational& leading() const { return coeffs_.back(); }

  Polynomial monic() const;
  Polynomial derivative() const;
  GaussianRational operator()(const GaussianRational& x) const;
  ExactMatrix operator()(const ExactMatrix& m) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string(const std::string& var = "t") const;

private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd.
Polynomial gcd(Polynomial a, Polynomial b);

/// p / gcd(p, p'), monic.
Polynomial squarefree_part(const Polynomial& p);

/// det(t*I - M), via Faddeev-LeVerrier.
Polynomial characteristic_polynomial(const ExactMatrix& m);

struct RootSplit {
  std::vector<std::pair<GaussianRational, std::size_t>> roots;  // root, multiplicity
  Polynomial remainder;  // monic, degree 0 iff the polynomial splits over Q(i)
};

/// Finds all roots of p lying in Q(i). Candidates come from complex
/// floating-point root finding on the squarefree part and are accepted only
/// after exact verification, so every reported root is exact.
RootSplit roots_in_gaussian_rationals(const Polynomial& p);

}  // namespace solvcohom
