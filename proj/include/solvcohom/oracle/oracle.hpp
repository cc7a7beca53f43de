#pragma once

#include <vector>

#include "solvcohom/lie/algebra.hpp"
#include "solvcohom/lie/complex.hpp"
#include "solvcohom/lie/representation.hpp"
#include "solvcohom/lie/weight.hpp"
#include "solvcohom/weights/weights.hpp"

namespace solvcohom::oracle {

/// The complex Lambda g* (x) V_mu (x) V built from the brackets by the
/// Leibniz rule d(a (x) v) = da (x) v + sum_j (x_j ^ a) (x) rho_mu(X_j) v with
/// dx_l = -sum_{j<k} c_jk^l x_j ^ x_k. Shares no code with the main CE
/// construction. Basis of degree p: p-subsets in increasing bit-mask order,
/// module index fastest.
FiniteComplex full_sector_complex(const LieAlgebraData& g, const RepresentationData& rep, const Weight& mu);

/// Betti numbers of full_sector_complex, from ranks taken with a pivot order
/// different from the one used by cohomology(). Representatives are left
/// empty.
CohomologyResult sector_cohomology_full(const LieAlgebraData& g, const RepresentationData& rep, const Weight& mu);

struct SectorReport {
  Weight tag;
  std::vector<std::size_t> full_betti;
  std::vector<std::size_t> block_betti;
  bool equal = false;
};

struct QuasiIsoReport {
  std::vector<SectorReport> sectors;  // sorted by tag
  bool all_equal() const;
};

/// For each distinct tag of the invariant complex, compares the full sector
/// with the invariant block. Sectors run concurrently.
QuasiIsoReport verify_quasi_iso(const LieAlgebraData& g, const RepresentationData& rep, const WeightAssignment& w);

}  // namespace solvcohom::oracle
