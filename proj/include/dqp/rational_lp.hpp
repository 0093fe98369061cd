#pragma once

#include <optional>
#include <vector>

#include "dqp/bigint.hpp"

namespace dqp::lp {

using Matrix = std::vector<std::vector<Rational>>;

/// Decides whether {x >= 0 : A x = b} is nonempty by an exact phase-one
/// simplex with Bland's rule. Returns a feasible point when one exists.
std::optional<std::vector<Rational>> find_feasible_point(const Matrix& a,
                                                         const std::vector<Rational>& b);

}  // namespace dqp::lp
