#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "solvcohom/exact/gaussian_rational.hpp"

namespace solvcohom {

enum class Parity { real, imaginary };

/// One basis direction of the period space. Every base comes with its
/// i-multiple, so "pi" and "i*pi" share base "pi". The bases "1" and "pi"
/// are built in; any other base is a user-declared symbol.
struct PeriodSymbol {
  std::string base;
  Parity base_parity = Parity::real;
  bool times_i = false;

  Parity parity() const {
    bool real = (base_parity == Parity::real) != times_i;
    return real ? Parity::real : Parity::imaginary;
  }
  bool is_builtin() const { return base == "1" || base == "pi"; }
  std::string to_string() const;

  friend bool operator==(const PeriodSymbol&, const PeriodSymbol&) = default;
  friend bool operator<(const PeriodSymbol& a, const PeriodSymbol& b);
};

/// Declared user symbols (e.g. the real lattice parameter "a"). Declaring a
/// symbol s also makes its companion i*s available.
class SymbolTable {
public:
  struct Entry {
    std::string name;
    Parity parity;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  void declare(const std::string& name, Parity parity);
  const PeriodSymbol* find(std::string_view name) const;
  const std::vector<Entry>& entries() const { return entries_; }

  friend bool operator==(const SymbolTable& a, const SymbolTable& b) { return a.entries_ == b.entries_; }

private:
  std::vector<Entry> entries_;
  std::map<std::string, PeriodSymbol, std::less<>> lookup_;
};

/// A Q-linear combination of period symbols. Symbols are assumed linearly
/// independent over Q; that is what makes the lattice tests decidable.
class PeriodValue {
public:
  PeriodValue() = default;

  static PeriodValue symbol(const PeriodSymbol& s, mpq_class coeff = 1);
  static PeriodValue from_scalar(const GaussianRational& z);

  /// Text form: rational combinations of "1", "i", "pi", "i*pi" and declared
  /// symbols, e.g. "a + 2*i*pi".
  static PeriodValue parse(std::string_view text, const SymbolTable& table);

  const std::map<PeriodSymbol, mpq_class>& coords() const { return coords_; }
  mpq_class coordinate(const PeriodSymbol& s) const;

  bool is_zero() const { return coords_.empty(); }
  PeriodValue conj() const;

  PeriodValue& operator+=(const PeriodValue& o);
  PeriodValue& operator-=(const PeriodValue& o);
  friend PeriodValue operator+(PeriodValue a, const PeriodValue& b) { return a += b; }
  friend PeriodValue operator-(PeriodValue a, const PeriodValue& b) { return a -= b; }
  PeriodValue operator-() const;

  /// Scaling by Q(i). Products of two period values are not defined.
  friend PeriodValue operator*(const GaussianRational& z, const PeriodValue& v);

  friend bool operator==(const PeriodValue&, const PeriodValue&) = default;

  std::string to_string() const;

private:
  void add_term(const PeriodSymbol& s, const mpq_class& c);

  std::map<PeriodSymbol, mpq_class> coords_;  // no zero entries
};

PeriodSymbol builtin_one();
PeriodSymbol builtin_i();
PeriodSymbol builtin_pi();
PeriodSymbol builtin_i_pi();

/// exp(v) = 1, i.e. v lies in 2*pi*i*Z.
bool period_in_2pi_i_Z(const PeriodValue& v);

/// conj(v) - v lies in 2*pi*i*Z, i.e. the imaginary part of v lies in pi*Z.
bool period_im_in_pi_Z(const PeriodValue& v);

}  // namespace solvcohom
