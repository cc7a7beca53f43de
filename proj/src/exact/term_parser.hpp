#pragma once

// Shared grammar for the scalar text forms:
//   sum    := ['+'|'-'] product (('+'|'-') product)*
//   product:= factor ('*' factor)*
//   factor := integer ['/' integer] | 'i' | identifier
// Each product collapses to coeff * i^k * symbol (at most one symbol).

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace solvcohom::detail {

struct Term {
  mpq_class coeff{1};
  bool times_i = false;  // after reducing i^k, k mod 2 (sign folded into coeff)
  std::optional<std::string> symbol;
  std::size_t position = 0;
};

std::vector<Term> parse_terms(std::string_view text);

}  // namespace solvcohom::detail
