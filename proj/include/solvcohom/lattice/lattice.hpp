#pragma once

#include <string>
#include <vector>

#include "solvcohom/exact/period_value.hpp"
#include "solvcohom/lie/algebra.hpp"
#include "solvcohom/lie/complex.hpp"
#include "solvcohom/lie/validation.hpp"
#include "solvcohom/lie/weight.hpp"
#include "solvcohom/weights/invariant_complex.hpp"

namespace solvcohom {

/// Generators of the image of the lattice in g/n, as log coordinates: one
/// period value per complement index.
struct LatticeData {
  SymbolTable symbols;
  std::vector<std::vector<PeriodValue>> generators;

  friend bool operator==(const LatticeData&, const LatticeData&) = default;
};

/// Generator lengths, and in real-complexified mode with a conjugation
/// table: the coordinate at sigma(j) is the conjugate of the one at j.
ValidationReport validate_lattice(const LieAlgebraData& g, const LatticeData& lat);

/// mu(delta) = sum_j mu_j * delta_j.
PeriodValue evaluate(const Weight& mu, const std::vector<PeriodValue>& delta);

/// e^mu is trivial on every generator.
bool char_trivial_on_lattice(const Weight& mu, const LatticeData& lat);

/// conj(e^mu) / e^mu is trivial on every generator.
bool ratio_char_trivial_on_lattice(const Weight& mu, const LatticeData& lat);

/// |e^mu| = 1 on the real form: mu_j + conj(mu_sigma(j)) = 0 for all j.
/// Throws ModeError in complex mode or when g has no conjugation table.
bool char_unitary(const Weight& mu, const LieAlgebraData& g);

enum class Tristate { holds, fails, unknown };
std::string to_string(Tristate t);

struct LabelVerdict {
  std::size_t degree = 0;
  std::size_t index = 0;
  std::string label;
  Weight tag;
  bool trivial_on_g = false;
  bool trivial_on_lattice = false;
  bool ratio_trivial = false;
  Tristate unitary = Tristate::unknown;
  bool selected = false;
};

/// Verdicts for every basis element of the invariant complex, in basis order.
std::vector<std::vector<LabelVerdict>> label_verdicts(const InvariantComplex& ic, const LatticeData& lat);

struct SelectionResult {
  FiniteComplex complex;
  std::vector<std::vector<LabelVerdict>> verdicts;  // every label, `selected` set on the kept ones
};

/// Keeps the labels whose tag is trivial on the lattice. Real-complexified
/// mode only (ModeError otherwise).
SelectionResult select_de_rham(const InvariantComplex& ic, const LatticeData& lat);

/// Keeps the labels whose ratio character is trivial on the lattice.
/// Complex mode only (ModeError otherwise).
SelectionResult select_dolbeault(const InvariantComplex& ic, const LatticeData& lat);

struct ConditionFlag {
  Tristate value = Tristate::unknown;
  std::vector<std::string> witnesses;  // labels (or basis names for box) where it fails or is undecided
};

struct ConditionFlags {
  ConditionFlag diamond1;  // mu = 0 <=> trivial on the lattice
  ConditionFlag diamond2;  // mu = 0 or e^mu not unitary
  ConditionFlag star;      // mu = 0 <=> ratio character trivial on the lattice
  ConditionFlag box;       // every lambda_i has trivial ratio character
};

/// All four flags are evaluated in either mode. diamond2 is unknown when
/// unitarity cannot be decided for some label with mu != 0.
ConditionFlags check_conditions(const InvariantComplex& ic, const LatticeData& lat);

/// h^{p,q} = C(n,p) * betti_q, indexed [p][q].
std::vector<std::vector<std::size_t>> dolbeault_hodge_table(const CohomologyResult& b, std::size_t n);

}  // namespace solvcohom
