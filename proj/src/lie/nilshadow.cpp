#include "solvcohom/lie/nilshadow.hpp"

#include "solvcohom/errors.hpp"

namespace solvcohom {

LieAlgebraData nilshadow(const LieAlgebraData& g, const std::vector<Weight>& algebra_weights) {
  const std::size_t n = g.dim();
  if (algebra_weights.size() != n) throw std::invalid_argument("nilshadow needs one weight per basis vector");

  StructureConstants c(g);
  LieAlgebraData u;
  u.basis_names = g.basis_names;
  u.mode = g.mode;
  u.conjugation = g.conjugation;
  for (std::size_t i = 0; i < n; ++i) u.nilradical.push_back(i);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector out(n);
      for (std::size_t k = 0; k < n; ++k) out[k] = c(i, j, k);
      out[j] -= algebra_weights[j].at_basis(g, i);
      out[i] += algebra_weights[i].at_basis(g, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!out[k].is_zero()) u.brackets.push_back({i, j, k, out[k]});
    }

  auto report = validate_algebra(u);
  if (!report.ok())
    throw ValidationError("nilshadow is not a valid Lie algebra (" + report.violations.front().message +
                          "); weight data is inconsistent");
  if (lower_central_series(u).back() != 0)
    throw ValidationError("nilshadow is not nilpotent; weight data is inconsistent");
  return u;
}

}  // namespace solvcohom
