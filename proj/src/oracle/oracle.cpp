#include "solvcohom/oracle/oracle.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>

#include "solvcohom/exact/linalg.hpp"
#include "solvcohom/weights/invariant_complex.hpp"

namespace solvcohom::oracle {

namespace {

using Form = std::vector<std::size_t>;          // strictly increasing indices
using Cochain = std::map<Form, GaussianRational>;  // linear combination of forms

// x_j ^ x_I, returned as (sign, sorted form); sign 0 if j is in I.
std::pair<int, Form> wedge_left(std::size_t j, const Form& form) {
  Form out;
  int sign = 1;
  bool placed = false;
  for (auto i : form) {
    if (i == j) return {0, {}};
    if (!placed && j < i) {
      out.push_back(j);
      placed = true;
    }
    if (!placed) sign = -sign;
    out.push_back(i);
  }
  if (!placed) out.push_back(j);
  return {sign, out};
}

class Exterior {
public:
  explicit Exterior(const LieAlgebraData& g) : n_(g.dim()), c_(n_ * n_ * n_) {
    for (const auto& b : g.brackets) {
      if (b.i == b.j) continue;
      at(b.i, b.j, b.k) = b.coeff;
      at(b.j, b.i, b.k) = -b.coeff;
    }
    // d x_l as a 2-form
    for (std::size_t l = 0; l < n_; ++l) {
      Cochain dl;
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = j + 1; k < n_; ++k)
          if (!at(j, k, l).is_zero()) dl[{j, k}] -= at(j, k, l);
      dx_.push_back(std::move(dl));
    }
  }

  // d x_I = sum_r (-1)^r x_{i_0} ^ .. ^ d x_{i_r} ^ .. ^ x_{i_{p-1}}
  Cochain d(const Form& form) const {
    Cochain out;
    for (std::size_t r = 0; r < form.size(); ++r) {
      Form before(form.begin(), form.begin() + r);
      Form after(form.begin() + r + 1, form.end());
      for (const auto& [two, coeff] : dx_[form[r]]) {
        // before ^ two ^ after; insert the two indices into `before ^ after`
        Form merged = before;
        merged.insert(merged.end(), two.begin(), two.end());
        merged.insert(merged.end(), after.begin(), after.end());
        auto [sign, sorted] = sort_with_sign(merged);
        if (sign == 0) continue;
        GaussianRational s = (r % 2 == 0) == (sign > 0) ? GaussianRational(1) : GaussianRational(-1);
        out[sorted] += s * coeff;
      }
    }
    return out;
  }

private:
  GaussianRational& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }

  static std::pair<int, Form> sort_with_sign(Form f) {
    int sign = 1;
    for (std::size_t a = 0; a < f.size(); ++a)
      for (std::size_t b = a + 1; b < f.size(); ++b) {
        if (f[a] == f[b]) return {0, {}};
        if (f[a] > f[b]) sign = -sign;
      }
    std::sort(f.begin(), f.end());
    return {sign, f};
  }

  std::size_t n_;
  std::vector<GaussianRational> c_;
  std::vector<Cochain> dx_;
};

std::vector<std::vector<Form>> forms_by_degree(std::size_t n) {
  std::vector<std::vector<Form>> out(n + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Form f;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) f.push_back(i);
    out[f.size()].push_back(std::move(f));
  }
  return out;
}

}  // namespace

FiniteComplex full_sector_complex(const LieAlgebraData& g, const RepresentationData& rep, const Weight& mu) {
  const std::size_t n = g.dim();
  const std::size_t m = rep.dim;
  if (n > 20) throw std::invalid_argument("oracle is limited to dim g <= 20");
  Exterior ext(g);
  auto forms = forms_by_degree(n);

  std::vector<ExactMatrix> act;
  for (std::size_t j = 0; j < n; ++j) {
    ExactMatrix a = rep.matrices.at(j);
    auto pos = g.complement_position(j);
    if (pos && mu.size() > 0)
      for (std::size_t k = 0; k < m; ++k) a(k, k) += mu[*pos];
    act.push_back(std::move(a));
  }

  FiniteComplex out;
  std::vector<std::map<Form, std::size_t>> index(n + 1);
  for (std::size_t p = 0; p <= n; ++p) {
    out.dims.push_back(forms[p].size() * m);
    std::vector<std::string> labels;
    for (std::size_t f = 0; f < forms[p].size(); ++f) {
      index[p][forms[p][f]] = f;
      for (std::size_t k = 0; k < m; ++k) {
        std::string name;
        for (auto i : forms[p][f]) name += (name.empty() ? "" : "^") + g.basis_names[i] + "*";
        labels.push_back((name.empty() ? "1" : name) + " (x) e" + std::to_string(k + 1));
      }
    }
    out.labels.push_back(std::move(labels));
  }

  for (std::size_t p = 0; p < n; ++p) {
    ExactMatrix d(out.dims[p + 1], out.dims[p]);
    for (std::size_t f = 0; f < forms[p].size(); ++f) {
      const Form& form = forms[p][f];
      for (const auto& [target, coeff] : ext.d(form)) {
        const std::size_t row = index[p + 1].at(target);
        for (std::size_t k = 0; k < m; ++k) d(row * m + k, f * m + k) += coeff;
      }
      for (std::size_t j = 0; j < n; ++j) {
        auto [sign, target] = wedge_left(j, form);
        if (sign == 0) continue;
        const std::size_t row = index[p + 1].at(target);
        for (std::size_t k = 0; k < m; ++k)
          for (std::size_t l = 0; l < m; ++l)
            if (!act[j](k, l).is_zero())
              d(row * m + k, f * m + l) += sign > 0 ? act[j](k, l) : -act[j](k, l);
      }
    }
    out.differentials.push_back(std::move(d));
  }
  return out;
}

CohomologyResult sector_cohomology_full(const LieAlgebraData& g, const RepresentationData& rep, const Weight& mu) {
  FiniteComplex c = full_sector_complex(g, rep, mu);
  check_complex(c);
  std::vector<std::size_t> ranks;
  for (const auto& d : c.differentials) ranks.push_back(rank(d, PivotOrder::reversed_first_nonzero));
  CohomologyResult out;
  for (std::size_t p = 0; p < c.dims.size(); ++p) {
    std::size_t outgoing = p < ranks.size() ? ranks[p] : 0;
    std::size_t incoming = p > 0 ? ranks[p - 1] : 0;
    out.betti.push_back(c.dims[p] - outgoing - incoming);
  }
  out.representatives.resize(c.dims.size());
  return out;
}

bool QuasiIsoReport::all_equal() const {
  return std::all_of(sectors.begin(), sectors.end(), [](const SectorReport& s) { return s.equal; });
}

QuasiIsoReport verify_quasi_iso(const LieAlgebraData& g, const RepresentationData& rep, const WeightAssignment& w) {
  InvariantComplex ic = build_invariant_complex(g, rep, w);
  std::vector<std::future<SectorReport>> jobs;
  for (const auto& mu : ic.distinct_tags()) {
    jobs.push_back(std::async(std::launch::async, [&g, &rep, &ic, mu] {
      SectorReport s;
      s.tag = mu;
      s.full_betti = sector_cohomology_full(g, rep, mu).betti;
      s.block_betti = cohomology(ic.block(mu)).betti;
      s.equal = s.full_betti == s.block_betti;
      return s;
    }));
  }
  QuasiIsoReport report;
  for (auto& job : jobs) report.sectors.push_back(job.get());
  return report;
}

}  // namespace solvcohom::oracle
