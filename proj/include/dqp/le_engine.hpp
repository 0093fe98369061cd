#pragma once

// Lê numbers of the minimal D(p(p+1)/2, p) germ recomputed from the incidence
// variety {[X][y] = 0, p_j(y) = 0} cut by generic hyperplanes in
// P^{p(p+1)/2 - 1} x P^{p-1}, counted with the bidegree intersection formula.

#include <string>
#include <vector>

#include "dqp/bigint.hpp"
#include "dqp/chow.hpp"
#include "dqp/symbolic_polynomial.hpp"

namespace dqp::le {

struct LeSystemSpec {
  int p;
  int i;
  chow::BidegreeSystem system;
  int matrix_equations;  // (1,1) classes
  int quadrics;          // (0,2) classes
  int hyperplanes;       // (1,0) classes
};

/// Class system whose intersection number is the multiplicity of the
/// underlying set of the Lê cycle of dimension p(p+1)/2 - i.
/// Requires p >= 2 and 1 <= i <= p.
LeSystemSpec build_le_system(int p, int i);

/// Intersection number of build_le_system(p, i).
BigInt underlying_multiplicity_via_chow(int p, int i);

/// Twice the underlying multiplicity: the cycle carries multiplicity 2.
BigInt le_number_via_chow(int p, int i);

inline constexpr int kMaxSymbolicDeterminantSize = 8;

/// Determinant of the generic symmetric p x p matrix whose (i,j) entry,
/// i <= j, is the variable with index symmetric_variable_index(p, i, j).
SymbolicPolynomial generic_symmetric_det(int p);

/// Index of x_{i,j} (0-based, i <= j) in row-major upper-triangular order.
int symmetric_variable_index(int p, int i, int j);

/// Names "x11", "x12", ... in symmetric_variable_index order.
std::vector<std::string> symmetric_variable_names(int p);

/// Order at the origin of det X.
int det_multiplicity(int p);

}  // namespace dqp::le
