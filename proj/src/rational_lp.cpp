#include "dqp/rational_lp.hpp"

#include <stdexcept>

namespace dqp::lp {

std::optional<std::vector<Rational>> find_feasible_point(const Matrix& a,
                                                         const std::vector<Rational>& b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("row count mismatch");
  const std::size_t vars = rows == 0 ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != vars) throw std::invalid_argument("ragged constraint matrix");
  }

  // Tableau columns: original variables, one artificial per row, then rhs.
  const std::size_t cols = vars + rows;
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + 1));
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const bool flip = b[r] < 0;
    for (std::size_t c = 0; c < vars; ++c) t[r][c] = flip ? Rational(-a[r][c]) : a[r][c];
    t[r][vars + r] = 1;
    t[r][cols] = flip ? Rational(-b[r]) : b[r];
    basis[r] = vars + r;
  }

  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Rational> cost(cols + 1);
  for (std::size_t c = 0; c < vars; ++c) {
    for (std::size_t r = 0; r < rows; ++r) cost[c] -= t[r][c];
  }
  for (std::size_t r = 0; r < rows; ++r) cost[cols] -= t[r][cols];

  while (true) {
    std::size_t entering = cols;
    for (std::size_t c = 0; c < cols; ++c) {
      if (cost[c] < 0) {
        entering = c;
        break;
      }
    }
    if (entering == cols) break;

    std::size_t leaving = rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][entering] <= 0) continue;
      Rational ratio = t[r][cols] / t[r][entering];
      if (leaving == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leaving])) {
        leaving = r;
        best_ratio = std::move(ratio);
      }
    }
    // Phase one is bounded below by zero, so some row always limits the step.
    if (leaving == rows) throw std::logic_error("phase-one simplex unbounded");

    const Rational pivot = t[leaving][entering];
    for (auto& v : t[leaving]) v /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leaving || t[r][entering] == 0) continue;
      const Rational factor = t[r][entering];
      for (std::size_t c = 0; c <= cols; ++c) t[r][c] -= factor * t[leaving][c];
    }
    if (cost[entering] != 0) {
      const Rational factor = cost[entering];
      for (std::size_t c = 0; c <= cols; ++c) cost[c] -= factor * t[leaving][c];
    }
    basis[leaving] = entering;
  }

  // cost[cols] holds minus the optimal sum of artificials.
  if (cost[cols] != 0) return std::nullopt;
  std::vector<Rational> x(vars);
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < vars) x[basis[r]] = t[r][cols];
  }
  return x;
}

}  // namespace dqp::lp
