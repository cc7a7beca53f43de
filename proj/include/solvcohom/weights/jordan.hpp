#pragma once

#include <utility>
#include <vector>

#include "solvcohom/exact/matrix.hpp"

namespace solvcohom {

struct JordanDecomposition {
  ExactMatrix semisimple;
  ExactMatrix nilpotent;
  /// Distinct eigenvalues with algebraic multiplicity, sorted.
  std::vector<std::pair<GaussianRational, std::size_t>> eigenvalues;
};

/// Additive Jordan-Chevalley decomposition M = S + N over Q(i).
///
/// S is computed twice: by Newton iteration S <- S - q(S) q'(S)^{-1} on the
/// squarefree part q of the characteristic polynomial (so S is a polynomial
/// in M), and from the generalized eigenspaces ker (M - r)^{mult}. The two
/// must agree entry for entry.
///
/// Throws ExtendScalarsError when the characteristic polynomial does not
/// split over Q(i).
JordanDecomposition jordan_chevalley_additive(const ExactMatrix& m);

}  // namespace solvcohom
