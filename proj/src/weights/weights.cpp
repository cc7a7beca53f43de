#include "solvcohom/weights/weights.hpp"

#include "solvcohom/errors.hpp"
#include "solvcohom/weights/jordan.hpp"

namespace solvcohom {

namespace {

void check_semisimple_diagonal(const ExactMatrix& m, const std::vector<Weight>& weights, std::size_t position,
                               std::size_t index, const std::string& what, ValidationReport& report) {
  Vector diag;
  for (const auto& w : weights) diag.push_back(w[position]);
  ExactMatrix d = ExactMatrix::diagonal(diag);
  if (!commutator(m, d).is_zero()) {
    report.add("weight-compatibility", what + ": declared diagonal does not commute with the matrix", {index});
  } else if (!is_nilpotent(m - d)) {
    report.add("weight-compatibility", what + ": matrix minus declared diagonal is not nilpotent", {index});
  }
}

bool shapes_ok(const LieAlgebraData& g, const RepresentationData& rep, const WeightAssignment& w,
               ValidationReport& report) {
  if (w.algebra.size() != g.dim())
    report.add("weight-shape", "expected " + std::to_string(g.dim()) + " algebra weights");
  if (w.rep.size() != rep.dim)
    report.add("weight-shape", "expected " + std::to_string(rep.dim) + " representation weights");
  for (std::size_t i = 0; i < w.algebra.size(); ++i)
    if (w.algebra[i].size() != g.rank())
      report.add("weight-shape", "algebra weight must have one coordinate per complement index", {i});
  for (std::size_t k = 0; k < w.rep.size(); ++k)
    if (w.rep[k].size() != g.rank())
      report.add("weight-shape", "representation weight must have one coordinate per complement index", {k});
  return report.ok();
}

}  // namespace

ValidationReport validate_weights(const LieAlgebraData& g, const RepresentationData& rep, const WeightAssignment& w) {
  ValidationReport report;
  if (!shapes_ok(g, rep, w, report)) return report;

  StructureConstants c(g);
  for (std::size_t j = 0; j < g.complement.size(); ++j) {
    const std::size_t idx = g.complement[j];
    check_semisimple_diagonal(c.ad(idx), w.algebra, j, idx, "ad(" + g.basis_names[idx] + ")", report);
    check_semisimple_diagonal(rep.matrices[idx], w.rep, j, idx, "rho(" + g.basis_names[idx] + ")", report);
  }

  const std::size_t n = g.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k)
        if (!c(a, b, k).is_zero() && !(w.algebra[a] + w.algebra[b] == w.algebra[k]))
          report.add("weight-additivity", "bracket does not respect the weight grading", {a, b, k});

  for (std::size_t a = 0; a < n; ++a) {
    const auto& r = rep.matrices[a];
    for (std::size_t k = 0; k < rep.dim; ++k)
      for (std::size_t l = 0; l < rep.dim; ++l)
        if (!r(k, l).is_zero() && !(w.algebra[a] + w.rep[l] == w.rep[k]))
          report.add("rep-weight-grading", "representation matrix does not respect the weight grading", {a, k, l});
  }
  return report;
}

WeightAssignment infer_weights(const LieAlgebraData& g, const RepresentationData& rep) {
  const std::size_t rank = g.rank();
  WeightAssignment w;
  std::vector<std::vector<GaussianRational>> alg(g.dim(), std::vector<GaussianRational>(rank));
  std::vector<std::vector<GaussianRational>> mod(rep.dim, std::vector<GaussianRational>(rank));

  StructureConstants c(g);
  auto read_diagonal = [&](const ExactMatrix& m, std::vector<std::vector<GaussianRational>>& out, std::size_t j,
                           const std::string& what) {
    auto jordan = jordan_chevalley_additive(m);
    if (!jordan.semisimple.is_diagonal()) {
      throw ValidationError("semisimple part of " + what +
                            " is not diagonal in the given basis; supply an adapted basis and explicit weights");
    }
    for (std::size_t i = 0; i < m.rows(); ++i) out[i][j] = jordan.semisimple(i, i);
  };

  for (std::size_t j = 0; j < rank; ++j) {
    const std::size_t idx = g.complement[j];
    read_diagonal(c.ad(idx), alg, j, "ad(" + g.basis_names[idx] + ")");
    read_diagonal(rep.matrices.at(idx), mod, j, "rho(" + g.basis_names[idx] + ")");
  }
  for (auto& v : alg) w.algebra.emplace_back(std::move(v));
  for (auto& v : mod) w.rep.emplace_back(std::move(v));

  auto report = validate_weights(g, rep, w);
  if (!report.ok()) throw ValidationError("inferred weights are inconsistent: " + report.violations.front().message);
  return w;
}

std::vector<Weight> derived_rep_weights(const LieAlgebraData& g, const RepresentationData& rep,
                                        const std::vector<Weight>& algebra_weights) {
  switch (rep.kind) {
    case RepresentationData::Kind::adjoint:
      return algebra_weights;
    case RepresentationData::Kind::trivial:
      return {Weight::zero(g.rank())};
    case RepresentationData::Kind::explicit_matrices:
      break;
  }
  throw ValidationError("explicit representations need explicit weights or \"infer\"");
}

}  // namespace solvcohom
