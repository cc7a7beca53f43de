#pragma once

#include <vector>

#include "solvcohom/lie/algebra.hpp"
#include "solvcohom/lie/representation.hpp"
#include "solvcohom/lie/validation.hpp"
#include "solvcohom/lie/weight.hpp"

namespace solvcohom {

/// Weights of the semisimple parts along the complement:
/// (ad X_c)_s = diag(algebra[i](X_c)) and (R X_c)_s = diag(rep[k](X_c)).
struct WeightAssignment {
  std::vector<Weight> algebra;  // lambda_i, one per basis vector of g
  std::vector<Weight> rep;      // lambda'_k, one per basis vector of the module

  friend bool operator==(const WeightAssignment&, const WeightAssignment&) = default;
};

/// For every complement index c, the declared diagonal D must commute with
/// ad(X_c) (resp. R_c) and leave a nilpotent residue, which makes D the
/// semisimple part. Also checks that brackets and the representation are
/// graded by the weights.
ValidationReport validate_weights(const LieAlgebraData& g, const RepresentationData& rep, const WeightAssignment& w);

/// Reads the weights off the Jordan decompositions of ad(X_c) and R_c.
/// Throws ExtendScalarsError for non-split characteristic polynomials and
/// ValidationError when a semisimple part is not diagonal in the given basis
/// or the inferred weights fail validate_weights.
WeightAssignment infer_weights(const LieAlgebraData& g, const RepresentationData& rep);

/// Weights for the adjoint or trivial module derived from algebra weights.
std::vector<Weight> derived_rep_weights(const LieAlgebraData& g, const RepresentationData& rep,
                                        const std::vector<Weight>& algebra_weights);

}  // namespace solvcohom
