#include "solvcohom/lie/algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "solvcohom/exact/linalg.hpp"

namespace solvcohom {

std::string to_string(GroundMode mode) {
  return mode == GroundMode::complex ? "complex" : "real-complexified";
}

std::optional<std::size_t> LieAlgebraData::complement_position(std::size_t index) const {
  auto it = std::find(complement.begin(), complement.end(), index);
  if (it == complement.end()) return std::nullopt;
  return static_cast<std::size_t>(it - complement.begin());
}

StructureConstants::StructureConstants(const LieAlgebraData& g) : n_(g.dim()), table_(n_ * n_ * n_) {
  std::vector<GaussianRational> raw(n_ * n_ * n_);
  std::vector<bool> given(n_ * n_, false);
  for (const auto& b : g.brackets) {
    if (b.i >= n_ || b.j >= n_ || b.k >= n_) throw std::out_of_range("bracket index out of range");
    raw[(b.i * n_ + b.j) * n_ + b.k] += b.coeff;
    given[b.i * n_ + b.j] = true;
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        GaussianRational c = given[i * n_ + j] ? raw[(i * n_ + j) * n_ + k] : -raw[(j * n_ + i) * n_ + k];
        table_[(j * n_ + i) * n_ + k] = -c;
        table_[(i * n_ + j) * n_ + k] = std::move(c);
      }
    }
  }
}

Vector StructureConstants::bracket(const Vector& x, const Vector& y) const {
  Vector out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      GaussianRational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n_; ++k) {
        const auto& c = (*this)(i, j, k);
        if (!c.is_zero()) out[k] += xy * c;
      }
    }
  }
  return out;
}

ExactMatrix StructureConstants::ad(std::size_t i) const {
  ExactMatrix m(n_, n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t k = 0; k < n_; ++k) m(k, j) = (*this)(i, j, k);
  return m;
}

std::vector<std::size_t> lower_central_series(const StructureConstants& c, const std::vector<std::size_t>& acting,
                                              const std::vector<std::size_t>& ideal) {
  const std::size_t n = c.dim();
  std::vector<Vector> current;
  for (auto i : ideal) {
    Vector e(n);
    e[i] = 1;
    current.push_back(std::move(e));
  }
  std::vector<std::size_t> dims{current.size()};
  while (!current.empty()) {
    EchelonBasis next(n);
    std::vector<Vector> spanning;
    for (auto a : acting) {
      Vector xa(n);
      xa[a] = 1;
      for (const auto& v : current) {
        Vector w = c.bracket(xa, v);
        if (next.insert(w)) spanning.push_back(std::move(w));
      }
    }
    if (spanning.size() == current.size()) break;  // stabilized above zero
    current = std::move(spanning);
    dims.push_back(current.size());
  }
  return dims;
}

std::vector<std::size_t> lower_central_series(const LieAlgebraData& g) {
  std::vector<std::size_t> all(g.dim());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return lower_central_series(StructureConstants(g), all, all);
}

bool is_abelian(const LieAlgebraData& g) {
  return std::all_of(g.brackets.begin(), g.brackets.end(), [](const Bracket& b) { return b.coeff.is_zero(); });
}

namespace {

void check_indices(const LieAlgebraData& g, ValidationReport& report) {
  const std::size_t n = g.dim();
  if (n > 63) report.add("dimension", "at most 63 basis vectors are supported");
  std::set<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.basis_names[i].empty()) report.add("basis-names", "empty basis name", {i});
    if (!names.insert(g.basis_names[i]).second)
      report.add("basis-names", "duplicate basis name '" + g.basis_names[i] + "'", {i});
  }
  for (const auto& b : g.brackets) {
    if (b.i >= n || b.j >= n || b.k >= n)
      report.add("bracket-index", "bracket index out of range", {b.i, b.j, b.k});
  }
  for (auto i : g.nilradical)
    if (i >= n) report.add("nilradical", "nilradical index out of range", {i});
  for (auto i : g.complement)
    if (i >= n) report.add("complement", "complement index out of range", {i});
}

void check_antisymmetry(const LieAlgebraData& g, ValidationReport& report) {
  const std::size_t n = g.dim();
  std::vector<GaussianRational> raw(n * n * n);
  std::vector<bool> given(n * n, false);
  for (const auto& b : g.brackets) {
    if (b.i == b.j && !b.coeff.is_zero()) {
      report.add("antisymmetry", "[X,X] must vanish", {b.i, b.j, b.k});
    }
    raw[(b.i * n + b.j) * n + b.k] += b.coeff;
    given[b.i * n + b.j] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!given[i * n + j] || !given[j * n + i]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (!(raw[(i * n + j) * n + k] == -raw[(j * n + i) * n + k]))
          report.add("antisymmetry", "[X_i,X_j] != -[X_j,X_i]", {i, j, k});
    }
}

void check_jacobi(const StructureConstants& c, ValidationReport& report) {
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t m = 0; m < n; ++m) {
          GaussianRational sum;
          for (std::size_t l = 0; l < n; ++l) {
            sum += c(i, j, l) * c(l, k, m);
            sum += c(j, k, l) * c(l, i, m);
            sum += c(k, i, l) * c(l, j, m);
          }
          if (!sum.is_zero()) {
            report.add("jacobi", "Jacobi identity fails", {i, j, k});
            break;
          }
        }
      }
}

void check_split(const LieAlgebraData& g, const StructureConstants& c, ValidationReport& report) {
  const std::size_t n = g.dim();
  std::vector<int> seen(n, 0);
  for (auto i : g.nilradical) seen[i] += 1;
  for (auto i : g.complement) seen[i] += 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i] == 0) report.add("split", "index in neither nilradical nor complement", {i});
    if (seen[i] > 1) report.add("split", "index listed more than once across nilradical and complement", {i});
  }
  std::vector<bool> in_nil(n, false);
  for (auto i : g.nilradical) in_nil[i] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!c(i, j, k).is_zero() && !in_nil[k])
          report.add("nilradical-ideal", "[g,g] not contained in the nilradical", {i, j, k});

  auto series = lower_central_series(c, g.nilradical, g.nilradical);
  if (series.back() != 0) {
    report.add("nilradical-nilpotent",
               "lower central series of the nilradical stalls at dimension " + std::to_string(series.back()));
  }
}

void check_conjugation(const LieAlgebraData& g, const StructureConstants& c, ValidationReport& report) {
  if (!g.conjugation) return;
  if (g.mode == GroundMode::complex) {
    report.add("conjugation", "a conjugation pairing is only meaningful in real-complexified mode");
  }
  const auto& s = *g.conjugation;
  const std::size_t n = g.dim();
  if (s.size() != n) {
    report.add("conjugation", "conjugation must list one image per basis index");
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] >= n) {
      report.add("conjugation", "conjugation image out of range", {i});
      return;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (s[s[i]] != i) report.add("conjugation", "conjugation is not an involution", {i, s[i]});
  if (!report.ok()) return;

  std::vector<bool> in_nil(n, false);
  for (auto i : g.nilradical) in_nil[i] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (in_nil[i] != in_nil[s[i]])
      report.add("conjugation", "conjugation does not preserve the nilradical", {i, s[i]});

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!(c(s[i], s[j], s[k]) == c(i, j, k).conj()))
          report.add("conjugation", "structure constants do not conjugate under the pairing", {i, j, k});
}

}  // namespace

ValidationReport validate_algebra(const LieAlgebraData& g) {
  ValidationReport report;
  check_indices(g, report);
  if (!report.ok()) return report;
  check_antisymmetry(g, report);
  StructureConstants c(g);
  check_jacobi(c, report);
  check_split(g, c, report);
  check_conjugation(g, c, report);
  return report;
}

}  // namespace solvcohom
