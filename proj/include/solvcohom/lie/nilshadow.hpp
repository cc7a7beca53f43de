#pragma once

#include <vector>

#include "solvcohom/lie/algebra.hpp"
#include "solvcohom/lie/weight.hpp"

namespace solvcohom {

/// The nilshadow u_G = {X - ad_s(X)} carried on the same vector space:
///   [X_i, X_j]_u = [X_i, X_j] - lambda_j(X_i) X_j + lambda_i(X_j) X_i,
/// where ad_s(A + n) acts on X_k by lambda_k(A). `algebra_weights` has one
/// weight per basis vector. The result has empty complement and its whole
/// basis as nilradical.
///
/// Throws ValidationError if the result fails validation or is not
/// nilpotent, which means the weight data is inconsistent with g.
LieAlgebraData nilshadow(const LieAlgebraData& g, const std::vector<Weight>& algebra_weights);

}  // namespace solvcohom
