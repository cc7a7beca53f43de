#include "solvcohom/lattice/lattice.hpp"

#include "solvcohom/errors.hpp"
#include "solvcohom/lie/multi_index.hpp"

namespace solvcohom {

ValidationReport validate_lattice(const LieAlgebraData& g, const LatticeData& lat) {
  ValidationReport report;
  const std::size_t r = g.rank();
  for (std::size_t s = 0; s < lat.generators.size(); ++s) {
    const auto& delta = lat.generators[s];
    if (delta.size() != r) {
      report.add("lattice-shape", "generator " + std::to_string(s + 1) + " has " + std::to_string(delta.size()) +
                                      " coordinates, expected " + std::to_string(r));
      continue;
    }
    if (g.mode != GroundMode::real_complexified || !g.conjugation) continue;
    for (std::size_t j = 0; j < r; ++j) {
      auto pos = g.complement_position((*g.conjugation)[g.complement[j]]);
      if (!pos) continue;  // reported by validate_algebra
      if (!(delta[*pos] == delta[j].conj()))
        report.add("lattice-conjugation",
                   "generator " + std::to_string(s + 1) + ": coordinate at " +
                       g.basis_names[g.complement[*pos]] + " is not the conjugate of the one at " +
                       g.basis_names[g.complement[j]],
                   {g.complement[j], g.complement[*pos]});
    }
  }
  return report;
}

PeriodValue evaluate(const Weight& mu, const std::vector<PeriodValue>& delta) {
  PeriodValue out;
  for (std::size_t j = 0; j < mu.size() && j < delta.size(); ++j)
    if (!mu[j].is_zero()) out += mu[j] * delta[j];
  return out;
}

bool char_trivial_on_lattice(const Weight& mu, const LatticeData& lat) {
  for (const auto& delta : lat.generators)
    if (!period_in_2pi_i_Z(evaluate(mu, delta))) return false;
  return true;
}

bool ratio_char_trivial_on_lattice(const Weight& mu, const LatticeData& lat) {
  for (const auto& delta : lat.generators)
    if (!period_im_in_pi_Z(evaluate(mu, delta))) return false;
  return true;
}

bool char_unitary(const Weight& mu, const LieAlgebraData& g) {
  if (g.mode != GroundMode::real_complexified) throw ModeError("unitarity needs a real-complexified algebra");
  if (!g.conjugation) throw ModeError("unitarity needs a conjugation table");
  if (mu.size() == 0) return true;
  for (std::size_t j = 0; j < g.rank(); ++j) {
    auto pos = g.complement_position((*g.conjugation)[g.complement[j]]);
    if (!pos) throw ValidationError("conjugation does not preserve the complement");
    if (!(mu[j] + mu[*pos].conj()).is_zero()) return false;
  }
  return true;
}

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::holds:
      return "holds";
    case Tristate::fails:
      return "fails";
    case Tristate::unknown:
      break;
  }
  return "unknown";
}

std::vector<std::vector<LabelVerdict>> label_verdicts(const InvariantComplex& ic, const LatticeData& lat) {
  const bool can_test_unitary = ic.algebra.mode == GroundMode::real_complexified && ic.algebra.conjugation;
  std::vector<std::vector<LabelVerdict>> out;
  for (std::size_t p = 0; p < ic.basis.size(); ++p) {
    std::vector<LabelVerdict> degree;
    for (std::size_t k = 0; k < ic.basis[p].size(); ++k) {
      const auto& label = ic.basis[p][k];
      LabelVerdict v;
      v.degree = p;
      v.index = k;
      v.label = ic.complex.labels[p][k];
      v.tag = label.tag;
      v.trivial_on_g = label.tag.is_zero();
      v.trivial_on_lattice = char_trivial_on_lattice(label.tag, lat);
      v.ratio_trivial = ratio_char_trivial_on_lattice(label.tag, lat);
      if (can_test_unitary) v.unitary = char_unitary(label.tag, ic.algebra) ? Tristate::holds : Tristate::fails;
      degree.push_back(std::move(v));
    }
    out.push_back(std::move(degree));
  }
  return out;
}

namespace {

SelectionResult select(const InvariantComplex& ic, const LatticeData& lat, bool LabelVerdict::*criterion) {
  SelectionResult out;
  out.verdicts = label_verdicts(ic, lat);
  std::vector<std::vector<bool>> keep;
  for (auto& degree : out.verdicts) {
    std::vector<bool> row;
    for (auto& v : degree) {
      v.selected = v.*criterion;
      row.push_back(v.selected);
    }
    keep.push_back(std::move(row));
  }
  out.complex = restrict_complex(ic.complex, keep);
  return out;
}

}  // namespace

SelectionResult select_de_rham(const InvariantComplex& ic, const LatticeData& lat) {
  if (ic.mode != GroundMode::real_complexified)
    throw ModeError("de Rham selection needs a real-complexified algebra");
  return select(ic, lat, &LabelVerdict::trivial_on_lattice);
}

SelectionResult select_dolbeault(const InvariantComplex& ic, const LatticeData& lat) {
  if (ic.mode != GroundMode::complex) throw ModeError("Dolbeault selection needs a complex algebra");
  return select(ic, lat, &LabelVerdict::ratio_trivial);
}

ConditionFlags check_conditions(const InvariantComplex& ic, const LatticeData& lat) {
  ConditionFlags flags;
  bool d2_fail = false;
  bool d2_unknown = false;
  std::vector<std::string> d2_undecided;
  for (const auto& degree : label_verdicts(ic, lat))
    for (const auto& v : degree) {
      if (v.trivial_on_g != v.trivial_on_lattice) flags.diamond1.witnesses.push_back(v.label);
      if (v.trivial_on_g != v.ratio_trivial) flags.star.witnesses.push_back(v.label);
      if (!v.trivial_on_g) {
        if (v.unitary == Tristate::holds) {
          d2_fail = true;
          flags.diamond2.witnesses.push_back(v.label);
        } else if (v.unitary == Tristate::unknown) {
          d2_unknown = true;
          d2_undecided.push_back(v.label);
        }
      }
    }
  flags.diamond1.value = flags.diamond1.witnesses.empty() ? Tristate::holds : Tristate::fails;
  flags.star.value = flags.star.witnesses.empty() ? Tristate::holds : Tristate::fails;
  if (d2_fail) {
    flags.diamond2.value = Tristate::fails;
  } else if (d2_unknown) {
    flags.diamond2.value = Tristate::unknown;
    flags.diamond2.witnesses = std::move(d2_undecided);
  } else {
    flags.diamond2.value = Tristate::holds;
  }

  for (std::size_t i = 0; i < ic.algebra_weights.size(); ++i)
    if (!ratio_char_trivial_on_lattice(ic.algebra_weights[i], lat))
      flags.box.witnesses.push_back(ic.algebra.basis_names[i]);
  flags.box.value = flags.box.witnesses.empty() ? Tristate::holds : Tristate::fails;
  return flags;
}

std::vector<std::vector<std::size_t>> dolbeault_hodge_table(const CohomologyResult& b, std::size_t n) {
  std::vector<std::vector<std::size_t>> table(n + 1, std::vector<std::size_t>(b.betti.size()));
  for (std::size_t p = 0; p <= n; ++p)
    for (std::size_t q = 0; q < b.betti.size(); ++q) table[p][q] = binomial(n, p) * b.betti[q];
  return table;
}

}  // namespace solvcohom
