#pragma once

#include <vector>

#include "solvcohom/exact/matrix.hpp"
#include "solvcohom/lie/algebra.hpp"
#include "solvcohom/lie/validation.hpp"

namespace solvcohom {

/// Differentiated representation: matrices[i] = d rho(X_i), each m x m.
/// Weights of the semisimple part live in WeightAssignment.
struct RepresentationData {
  enum class Kind { explicit_matrices, adjoint, trivial };

  Kind kind = Kind::explicit_matrices;
  std::size_t dim = 0;
  std::vector<ExactMatrix> matrices;

  static RepresentationData adjoint(const LieAlgebraData& g);
  static RepresentationData trivial(const LieAlgebraData& g);

  friend bool operator==(const RepresentationData&, const RepresentationData&) = default;
};

/// Shapes, homomorphism law R([X_i,X_j]) = [R_i, R_j], and unipotence on
/// the nilradical (R_i nilpotent for every nilradical index).
ValidationReport validate_representation(const LieAlgebraData& g, const RepresentationData& rep);

}  // namespace solvcohom
