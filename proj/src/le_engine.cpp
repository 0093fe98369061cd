#include "dqp/le_engine.hpp"

#include <map>

#include "dqp/core.hpp"
#include "dqp/errors.hpp"

namespace dqp::le {

LeSystemSpec build_le_system(int p, int i) {
  if (p < 2) {
    throw ValidationError("Lê cycle systems require p >= 2 (got p = " + std::to_string(p) +
                          "); the hyperplane count would be negative");
  }
  if (i < 1 || i > p) {
    throw ValidationError("cycle index must satisfy 1 <= i <= p = " + std::to_string(p) +
                          " (got i = " + std::to_string(i) + ")");
  }
  const int entries = symmetric_entry_count(p);
  LeSystemSpec spec{p, i, {}, p, i - 1, entries - i - 1};
  // Projectivized x-space is P^{entries - 1}; y lives in P^{p-1}.
  spec.system.ambient_n = entries - 1;
  spec.system.ambient_m = p - 1;
  spec.system.classes.insert(spec.system.classes.end(), static_cast<std::size_t>(spec.matrix_equations),
                             chow::Bidegree{1, 1});
  spec.system.classes.insert(spec.system.classes.end(), static_cast<std::size_t>(spec.quadrics),
                             chow::Bidegree{0, 2});
  spec.system.classes.insert(spec.system.classes.end(), static_cast<std::size_t>(spec.hyperplanes),
                             chow::Bidegree{1, 0});
  chow::validate(spec.system);
  return spec;
}

BigInt underlying_multiplicity_via_chow(int p, int i) {
  return chow::intersection_number_ring(build_le_system(p, i).system);
}

BigInt le_number_via_chow(int p, int i) { return 2 * underlying_multiplicity_via_chow(p, i); }

int symmetric_variable_index(int p, int i, int j) {
  if (i > j) std::swap(i, j);
  // Rows 0..i-1 of the upper triangle hold p + (p-1) + ... + (p-i+1) entries.
  return i * p - i * (i - 1) / 2 + (j - i);
}

std::vector<std::string> symmetric_variable_names(int p) {
  std::vector<std::string> names(static_cast<std::size_t>(symmetric_entry_count(p)));
  for (int i = 0; i < p; ++i) {
    for (int j = i; j < p; ++j) {
      names[static_cast<std::size_t>(symmetric_variable_index(p, i, j))] =
          "x" + std::to_string(i + 1) + std::to_string(j + 1);
    }
  }
  return names;
}

namespace {

void check_det_size(int p) {
  if (p < 1 || p > kMaxSymbolicDeterminantSize) {
    throw ValidationError("symbolic determinant requires 1 <= p <= " +
                          std::to_string(kMaxSymbolicDeterminantSize) + " (got p = " +
                          std::to_string(p) + ")");
  }
}

// Laplace expansion along successive rows. The minor on rows row..p-1 depends
// only on the set of columns still available, so it is memoized by bitmask.
class CofactorExpander {
 public:
  explicit CofactorExpander(int p) : p_(p), vars_(symmetric_entry_count(p)) {}

  SymbolicPolynomial minor(int row, unsigned columns) {
    if (row == p_) return SymbolicPolynomial::constant(vars_, 1);
    if (auto it = memo_.find(columns); it != memo_.end()) return it->second;
    SymbolicPolynomial result(vars_);
    int position = 0;
    for (int col = 0; col < p_; ++col) {
      if (!(columns & (1U << col))) continue;
      SymbolicPolynomial term =
          SymbolicPolynomial::variable(vars_, symmetric_variable_index(p_, row, col)) *
          minor(row + 1, columns & ~(1U << col));
      if (position % 2 == 0) {
        result += term;
      } else {
        result -= term;
      }
      ++position;
    }
    memo_.emplace(columns, result);
    return result;
  }

 private:
  int p_;
  int vars_;
  std::map<unsigned, SymbolicPolynomial> memo_;
};

}  // namespace

SymbolicPolynomial generic_symmetric_det(int p) {
  check_det_size(p);
  CofactorExpander expander(p);
  return expander.minor(0, (1U << p) - 1);
}

int det_multiplicity(int p) {
  const SymbolicPolynomial det = generic_symmetric_det(p);
  if (!det.is_homogeneous() || det.total_degree() != p) {
    throw CheckFailure("determinant of the generic symmetric matrix is not homogeneous of degree p");
  }
  return det.order();
}

}  // namespace dqp::le
