#pragma once

// Compact text form for monomials and monomial ideals:
//   ideal    := monomial ("," monomial)*
//   monomial := "1" | factor ("*"? factor)*
//   factor   := ("x" | "y") index ("^" exponent)?
// Whitespace is ignored. One text may use x or y, not both.

#include <map>
#include <string_view>
#include <vector>

#include "dqp/monomial_ideal.hpp"

namespace dqp::closure {

struct ParsedMonomials {
  char letter = 0;  // 0 when only constants appear
  int max_index = 0;
  /// Per monomial: 1-based variable index -> exponent.
  std::vector<std::map<int, int>> monomials;
};

ParsedMonomials parse_monomials(std::string_view text);

/// Throws ValidationError if the texts use different variable letters.
char common_letter(const std::vector<const ParsedMonomials*>& parts);

Monomial to_monomial(const std::map<int, int>& powers, int variable_count);

MonomialIdeal to_ideal(const ParsedMonomials& parsed, int variable_count);

}  // namespace dqp::closure
