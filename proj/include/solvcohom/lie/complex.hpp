#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "solvcohom/exact/matrix.hpp"

namespace solvcohom {

/// Cochain complex concentrated in degrees 0..dims.size()-1.
/// differentials[p] maps degree p to degree p+1 (dims[p+1] x dims[p]).
struct FiniteComplex {
  std::vector<std::size_t> dims;
  std::vector<ExactMatrix> differentials;
  std::vector<std::vector<std::string>> labels;

  std::size_t top_degree() const { return dims.empty() ? 0 : dims.size() - 1; }
  std::size_t total_dim() const;
};

/// Throws ComplexError for the first degree with a shape mismatch or
/// d_{p+1} d_p != 0.
void check_complex(const FiniteComplex& c);

struct CohomologyResult {
  std::vector<std::size_t> betti;
  /// representatives[p] are cocycles whose classes form a basis of H^p.
  std::vector<std::vector<Vector>> representatives;
};

CohomologyResult cohomology(const FiniteComplex& c);

long euler_characteristic(const std::vector<std::size_t>& dims);

/// Subcomplex spanned by the kept basis vectors of each degree. Throws
/// ComplexError if some kept vector has a differential leaving the kept span.
FiniteComplex restrict_complex(const FiniteComplex& c, const std::vector<std::vector<bool>>& keep);

/// The complex with all differentials zero.
FiniteComplex zero_complex(const std::vector<std::size_t>& dims);

}  // namespace solvcohom
