#include "solvcohom/lie/ce.hpp"

#include <stdexcept>

namespace solvcohom {

namespace {

GaussianRational sign(std::size_t parity) { return parity % 2 == 0 ? GaussianRational(1) : GaussianRational(-1); }

}  // namespace

ExactMatrix ce_differential(const LieAlgebraData& g, const StructureConstants& c, const ModuleAction& module,
                            std::size_t p) {
  const std::size_t n = g.dim();
  if (p > n) throw std::out_of_range("CE degree " + std::to_string(p) + " exceeds dim g = " + std::to_string(n));
  if (module.matrices.size() != n) throw std::invalid_argument("module needs one matrix per basis vector");
  const std::size_t m = module.dim;

  // rho_mu(X_i) = mu(X_i) id + R_i
  std::vector<ExactMatrix> action;
  action.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ExactMatrix a = module.matrices[i];
    GaussianRational mu = module.character.at_basis(g, i);
    if (!mu.is_zero())
      for (std::size_t k = 0; k < m; ++k) a(k, k) += mu;
    action.push_back(std::move(a));
  }

  SubsetBasis source(n, p);
  SubsetBasis target(n, p + 1);
  ExactMatrix d(target.size() * m, source.size() * m);

  for (std::size_t rj = 0; rj < target.size(); ++rj) {
    const IndexSet J = target[rj];
    const auto idx = elements(J);

    for (std::size_t a = 0; a < idx.size(); ++a) {
      const std::size_t ci = source.position(J & ~singleton(idx[a]));
      const auto& act = action[idx[a]];
      const GaussianRational s = sign(a);
      for (std::size_t kr = 0; kr < m; ++kr)
        for (std::size_t kc = 0; kc < m; ++kc)
          if (!act(kr, kc).is_zero()) d(rj * m + kr, ci * m + kc) += s * act(kr, kc);
    }

    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        const IndexSet rest = J & ~singleton(idx[a]) & ~singleton(idx[b]);
        for (std::size_t l = 0; l < n; ++l) {
          const auto& coeff = c(idx[a], idx[b], l);
          if (coeff.is_zero() || contains(rest, l)) continue;
          const std::size_t ci = source.position(rest | singleton(l));
          const GaussianRational total = sign(a + b + count_below(rest, l)) * coeff;
          for (std::size_t k = 0; k < m; ++k) d(rj * m + k, ci * m + k) += total;
        }
      }
  }
  return d;
}

ExactMatrix ce_differential(const LieAlgebraData& g, const ModuleAction& module, std::size_t p) {
  return ce_differential(g, StructureConstants(g), module, p);
}

std::string cochain_label(const LieAlgebraData& g, IndexSet form, std::size_t k) {
  std::string out;
  for (auto i : elements(form)) out += (out.empty() ? "" : "^") + g.basis_names[i] + "*";
  if (out.empty()) out = "1";
  return out + " (x) e" + std::to_string(k + 1);
}

FiniteComplex ce_complex(const LieAlgebraData& g, const ModuleAction& module) {
  const std::size_t n = g.dim();
  const std::size_t m = module.dim;
  StructureConstants c(g);
  FiniteComplex out;
  for (std::size_t p = 0; p <= n; ++p) {
    SubsetBasis basis(n, p);
    out.dims.push_back(basis.size() * m);
    std::vector<std::string> labels;
    for (auto s : basis.subsets())
      for (std::size_t k = 0; k < m; ++k) labels.push_back(cochain_label(g, s, k));
    out.labels.push_back(std::move(labels));
    if (p < n) out.differentials.push_back(ce_differential(g, c, module, p));
  }
  return out;
}

}  // namespace solvcohom
