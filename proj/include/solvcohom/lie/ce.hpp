#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "solvcohom/exact/matrix.hpp"
#include "solvcohom/lie/algebra.hpp"
#include "solvcohom/lie/complex.hpp"
#include "solvcohom/lie/multi_index.hpp"
#include "solvcohom/lie/weight.hpp"

namespace solvcohom {

/// Coefficient module V_mu (x) V_rho: X acts by mu(X) * id + matrices[X].
struct ModuleAction {
  std::size_t dim = 1;
  std::vector<ExactMatrix> matrices;  // one dim x dim matrix per basis vector
  Weight character;
};

/// Matrix of d: Lambda^p g* (x) V -> Lambda^{p+1} g* (x) V with
///   (d w)(X_0..X_p) = sum_i (-1)^i X_i . w(..^X_i..)
///                   + sum_{i<j} (-1)^{i+j} w([X_i,X_j], ..^X_i..^X_j..)
/// on the basis x_I (x) v_k, I lexicographic, index = pos(I) * m + k.
/// Throws std::out_of_range for p > dim g.
ExactMatrix ce_differential(const LieAlgebraData& g, const ModuleAction& module, std::size_t p);

/// Same, reusing an already built structure-constant table.
ExactMatrix ce_differential(const LieAlgebraData& g, const StructureConstants& c, const ModuleAction& module,
                            std::size_t p);

/// The whole complex in degrees 0..dim g, with labels.
FiniteComplex ce_complex(const LieAlgebraData& g, const ModuleAction& module);

/// "x1^x3 (x) e2" style label for x_I (x) v_k (k is 0-based).
std::string cochain_label(const LieAlgebraData& g, IndexSet form, std::size_t k);

}  // namespace solvcohom
