#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "solvcohom/exact/matrix.hpp"
#include "solvcohom/lie/validation.hpp"

namespace solvcohom {

enum class GroundMode {
  real_complexified,  // g is real; we work on its complexification (de Rham side)
  complex,            // g is a complex Lie algebra (Dolbeault side)
};

std::string to_string(GroundMode mode);

/// One structure constant: [X_i, X_j] contains coeff * X_k.
struct Bracket {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  GaussianRational coeff;
  friend bool operator==(const Bracket&, const Bracket&) = default;
};

/// Lie algebra given by structure constants in a basis adapted to the
/// splitting g = span(complement) + n (n the nilradical).
struct LieAlgebraData {
  std::vector<std::string> basis_names;
  std::vector<Bracket> brackets;
  std::vector<std::size_t> nilradical;
  std::vector<std::size_t> complement;
  /// Involution on basis indices induced by complex conjugation; only in
  /// real-complexified mode.
  std::optional<std::vector<std::size_t>> conjugation;
  GroundMode mode = GroundMode::real_complexified;

  std::size_t dim() const { return basis_names.size(); }
  std::size_t rank() const { return complement.size(); }

  /// Position of a basis index inside `complement`, if it is a complement index.
  std::optional<std::size_t> complement_position(std::size_t index) const;

  friend bool operator==(const LieAlgebraData&, const LieAlgebraData&) = default;
};

/// Dense antisymmetric table c_{ij}^k. Each bracket entry (i, j) also fills
/// (j, i); consistency of the raw entries is checked by validate_algebra.
class StructureConstants {
public:
  explicit StructureConstants(const LieAlgebraData& g);

  std::size_t dim() const { return n_; }
  const GaussianRational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * n_ + j) * n_ + k];
  }

  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of ad(X_i); column j holds the coordinates of [X_i, X_j].
  ExactMatrix ad(std::size_t i) const;

private:
  std::size_t n_;
  std::vector<GaussianRational> table_;
};

/// Checks antisymmetry, Jacobi, the nilradical/complement split, nilpotency
/// of the nilradical and conjugation compatibility. Never throws on bad data.
ValidationReport validate_algebra(const LieAlgebraData& g);

/// Dimensions of C^1 = span(ideal), C^{k+1} = [g_acting, C^k] until the
/// sequence stabilizes. The last entry is 0 iff the action is nilpotent.
std::vector<std::size_t> lower_central_series(const StructureConstants& c, const std::vector<std::size_t>& acting,
                                              const std::vector<std::size_t>& ideal);

/// Lower central series of the whole algebra.
std::vector<std::size_t> lower_central_series(const LieAlgebraData& g);

bool is_abelian(const LieAlgebraData& g);

}  // namespace solvcohom
