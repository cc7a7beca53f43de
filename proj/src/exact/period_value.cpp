#include "solvcohom/exact/period_value.hpp"

#include <tuple>

#include "solvcohom/errors.hpp"
#include "term_parser.hpp"

namespace solvcohom {

namespace {

int base_rank(const std::string& base) {
  if (base == "1") return 0;
  if (base == "pi") return 1;
  return 2;
}

bool is_integer(const mpq_class& q) { return q.get_den() == 1; }

}  // namespace

PeriodSymbol builtin_one() { return {"1", Parity::real, false}; }
PeriodSymbol builtin_i() { return {"1", Parity::real, true}; }
PeriodSymbol builtin_pi() { return {"pi", Parity::real, false}; }
PeriodSymbol builtin_i_pi() { return {"pi", Parity::real, true}; }

bool operator<(const PeriodSymbol& a, const PeriodSymbol& b) {
  return std::forward_as_tuple(base_rank(a.base), a.base, a.times_i) <
         std::forward_as_tuple(base_rank(b.base), b.base, b.times_i);
}

std::string PeriodSymbol::to_string() const {
  if (base == "1") return times_i ? "i" : "1";
  return times_i ? "i*" + base : base;
}

void SymbolTable::declare(const std::string& name, Parity parity) {
  if (name == "i" || name == "pi") throw ParseError("", "symbol name '" + name + "' is reserved");
  if (lookup_.count(name)) throw ParseError("", "symbol '" + name + "' declared twice");
  entries_.push_back({name, parity});
  lookup_.emplace(name, PeriodSymbol{name, parity, false});
}

const PeriodSymbol* SymbolTable::find(std::string_view name) const {
  auto it = lookup_.find(name);
  return it == lookup_.end() ? nullptr : &it->second;
}

PeriodValue PeriodValue::symbol(const PeriodSymbol& s, mpq_class coeff) {
  PeriodValue v;
  v.add_term(s, coeff);
  return v;
}

PeriodValue PeriodValue::from_scalar(const GaussianRational& z) {
  PeriodValue v;
  v.add_term(builtin_one(), z.re());
  v.add_term(builtin_i(), z.im());
  return v;
}

PeriodValue PeriodValue::parse(std::string_view text, const SymbolTable& table) {
  PeriodValue v;
  for (const auto& t : detail::parse_terms(text)) {
    PeriodSymbol base = builtin_one();
    if (t.symbol) {
      if (*t.symbol == "pi") {
        base = builtin_pi();
      } else if (const PeriodSymbol* s = table.find(*t.symbol)) {
        base = *s;
      } else {
        throw ParseError("offset " + std::to_string(t.position), "undeclared symbol '" + *t.symbol + "'");
      }
    }
    base.times_i = t.times_i;
    v.add_term(base, t.coeff);
  }
  return v;
}

void PeriodValue::add_term(const PeriodSymbol& s, const mpq_class& c) {
  if (sgn(c) == 0) return;
  mpq_class value = c;
  value.canonicalize();
  auto [it, inserted] = coords_.try_emplace(s, value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0) coords_.erase(it);
  }
}

mpq_class PeriodValue::coordinate(const PeriodSymbol& s) const {
  auto it = coords_.find(s);
  return it == coords_.end() ? mpq_class(0) : it->second;
}

PeriodValue PeriodValue::conj() const {
  PeriodValue out = *this;
  for (auto& [s, c] : out.coords_)
    if (s.parity() == Parity::imaginary) c = -c;
  return out;
}

PeriodValue& PeriodValue::operator+=(const PeriodValue& o) {
  for (const auto& [s, c] : o.coords_) add_term(s, c);
  return *this;
}

PeriodValue& PeriodValue::operator-=(const PeriodValue& o) {
  for (const auto& [s, c] : o.coords_) add_term(s, -c);
  return *this;
}

PeriodValue PeriodValue::operator-() const {
  PeriodValue out = *this;
  for (auto& entry : out.coords_) entry.second = -entry.second;
  return out;
}

PeriodValue operator*(const GaussianRational& z, const PeriodValue& v) {
  PeriodValue out;
  for (const auto& [s, c] : v.coords_) {
    // (re + im*i) * c*s = re*c*s + im*c*(i*s), with i*(i*s) = -s.
    out.add_term(s, z.re() * c);
    PeriodSymbol rotated = s;
    rotated.times_i = !s.times_i;
    out.add_term(rotated, s.times_i ? mpq_class(-z.im() * c) : mpq_class(z.im() * c));
  }
  return out;
}

std::string PeriodValue::to_string() const {
  if (coords_.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : coords_) {
    std::string term;
    if (s == builtin_one()) {
      term = c.get_str();
    } else {
      term = coefficient_prefix(c) + s.to_string();
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

bool period_in_2pi_i_Z(const PeriodValue& v) {
  for (const auto& [s, c] : v.coords()) {
    if (!(s == builtin_i_pi())) return false;
    if (!is_integer(c) || c.get_num() % 2 != 0) return false;
  }
  return true;
}

bool period_im_in_pi_Z(const PeriodValue& v) {
  for (const auto& [s, c] : v.coords()) {
    if (s == builtin_i_pi()) {
      if (!is_integer(c)) return false;
    } else if (s.parity() == Parity::imaginary) {
      return false;
    }
  }
  return true;
}

}  // namespace solvcohom
