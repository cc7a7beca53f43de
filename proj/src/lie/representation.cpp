#include "solvcohom/lie/representation.hpp"

namespace solvcohom {

RepresentationData RepresentationData::adjoint(const LieAlgebraData& g) {
  StructureConstants c(g);
  RepresentationData rep;
  rep.kind = Kind::adjoint;
  rep.dim = g.dim();
  for (std::size_t i = 0; i < g.dim(); ++i) rep.matrices.push_back(c.ad(i));
  return rep;
}

RepresentationData RepresentationData::trivial(const LieAlgebraData& g) {
  RepresentationData rep;
  rep.kind = Kind::trivial;
  rep.dim = 1;
  rep.matrices.assign(g.dim(), ExactMatrix(1, 1));
  return rep;
}

ValidationReport validate_representation(const LieAlgebraData& g, const RepresentationData& rep) {
  ValidationReport report;
  const std::size_t n = g.dim();
  if (rep.matrices.size() != n) {
    report.add("representation-shape", "expected one matrix per basis vector (" + std::to_string(n) + "), got " +
                                            std::to_string(rep.matrices.size()));
    return report;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& m = rep.matrices[i];
    if (m.rows() != rep.dim || m.cols() != rep.dim)
      report.add("representation-shape", "matrix of " + g.basis_names[i] + " is not dim x dim", {i});
  }
  if (!report.ok()) return report;

  StructureConstants c(g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      ExactMatrix image(rep.dim, rep.dim);
      for (std::size_t k = 0; k < n; ++k)
        if (!c(i, j, k).is_zero()) image += c(i, j, k) * rep.matrices[k];
      if (!(image == commutator(rep.matrices[i], rep.matrices[j])))
        report.add("homomorphism", "R([X_i,X_j]) != [R_i,R_j]", {i, j});
    }

  for (auto i : g.nilradical)
    if (!is_nilpotent(rep.matrices[i]))
      report.add("unipotent", "representation is not unipotent on the nilradical: R(" + g.basis_names[i] +
                                  ") is not nilpotent", {i});
  return report;
}

}  // namespace solvcohom
