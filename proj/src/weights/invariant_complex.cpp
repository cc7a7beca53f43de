#include "solvcohom/weights/invariant_complex.hpp"

#include <algorithm>

#include "solvcohom/errors.hpp"
#include "solvcohom/lie/ce.hpp"

namespace solvcohom {

std::vector<Weight> InvariantComplex::distinct_tags() const {
  std::vector<Weight> tags;
  for (const auto& degree : basis)
    for (const auto& label : degree) tags.push_back(label.tag);
  std::sort(tags.begin(), tags.end());
  tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
  return tags;
}

std::vector<std::vector<bool>> InvariantComplex::tag_mask(const Weight& mu) const {
  std::vector<std::vector<bool>> mask;
  for (const auto& degree : basis) {
    std::vector<bool> row;
    for (const auto& label : degree) row.push_back(label.tag == mu);
    mask.push_back(std::move(row));
  }
  return mask;
}

FiniteComplex InvariantComplex::block(const Weight& mu) const { return restrict_complex(complex, tag_mask(mu)); }

InvariantComplex build_invariant_complex(const LieAlgebraData& g, const RepresentationData& rep,
                                         const WeightAssignment& w) {
  const std::size_t n = g.dim();
  const std::size_t m = rep.dim;
  if (w.algebra.size() != n || w.rep.size() != m)
    throw ValidationError("weight table does not match the algebra and representation dimensions");

  InvariantComplex out;
  out.mode = g.mode;
  out.rank = g.rank();
  out.algebra = g;
  out.algebra_weights = w.algebra;

  for (std::size_t p = 0; p <= n; ++p) {
    SubsetBasis subsets(n, p);
    std::vector<InvariantLabel> labels;
    std::vector<std::string> names;
    for (auto form : subsets.subsets()) {
      Weight lambda_i = Weight::zero(g.rank());
      for (auto i : elements(form)) lambda_i += w.algebra[i];
      for (std::size_t k = 0; k < m; ++k) {
        labels.push_back({form, k, lambda_i - w.rep[k]});
        names.push_back(cochain_label(g, form, k));
      }
    }
    out.complex.dims.push_back(labels.size());
    out.complex.labels.push_back(std::move(names));
    out.basis.push_back(std::move(labels));
  }

  StructureConstants c(g);
  ModuleAction module;
  module.dim = m;
  module.matrices = rep.matrices;

  for (std::size_t p = 0; p < n; ++p) {
    const auto& source = out.basis[p];
    const auto& target = out.basis[p + 1];
    ExactMatrix d(target.size(), source.size());

    std::vector<Weight> tags;
    for (const auto& l : source) tags.push_back(l.tag);
    std::sort(tags.begin(), tags.end());
    tags.erase(std::unique(tags.begin(), tags.end()), tags.end());

    for (const auto& mu : tags) {
      module.character = mu;
      ExactMatrix full = ce_differential(g, c, module, p);
      for (std::size_t col = 0; col < source.size(); ++col) {
        if (!(source[col].tag == mu)) continue;
        for (std::size_t row = 0; row < target.size(); ++row) {
          const auto& v = full(row, col);
          if (v.is_zero()) continue;
          if (!(target[row].tag == mu)) {
            throw ValidationError("weight-grading violation: d(" + out.complex.labels[p][col] + ") has coefficient " +
                                  v.to_string() + " on " + out.complex.labels[p + 1][row] + " of tag " +
                                  target[row].tag.to_string() + " != " + mu.to_string());
          }
          d(row, col) = v;
        }
      }
    }
    out.complex.differentials.push_back(std::move(d));
  }
  check_complex(out.complex);
  return out;
}

}  // namespace solvcohom
