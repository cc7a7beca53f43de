#pragma once

#include <vector>

#include "solvcohom/lie/algebra.hpp"
#include "solvcohom/lie/complex.hpp"
#include "solvcohom/lie/multi_index.hpp"
#include "solvcohom/lie/representation.hpp"
#include "solvcohom/lie/weight.hpp"
#include "solvcohom/weights/weights.hpp"

namespace solvcohom {

/// Basis element x_I (x) v_mu (x) v_k with mu = sum_{i in I} lambda_i - lambda'_k.
struct InvariantLabel {
  IndexSet form = 0;
  std::size_t k = 0;
  Weight tag;
};

/// Degree p has C(n,p) * m basis elements in the order of the CE complex
/// (index = pos(I) * m + k). The differential of (I,k) is computed in the
/// module of weight mu_{I,k}, so it is block-diagonal over tags.
struct InvariantComplex {
  FiniteComplex complex;
  std::vector<std::vector<InvariantLabel>> basis;
  GroundMode mode = GroundMode::real_complexified;
  std::size_t rank = 0;  // number of complement coordinates of each tag
  LieAlgebraData algebra;
  std::vector<Weight> algebra_weights;

  /// Sorted, without repetition.
  std::vector<Weight> distinct_tags() const;
  /// Per-degree mask of the basis elements carrying a given tag.
  std::vector<std::vector<bool>> tag_mask(const Weight& mu) const;
  /// Subcomplex of one weight tag.
  FiniteComplex block(const Weight& mu) const;
};

/// Throws ValidationError ("weight-grading violation") if some image has a
/// nonzero coefficient on a basis element of a different tag.
InvariantComplex build_invariant_complex(const LieAlgebraData& g, const RepresentationData& rep,
                                         const WeightAssignment& w);

}  // namespace solvcohom
