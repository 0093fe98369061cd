#include "dqp/le_engine.hpp"

#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "dqp/core.hpp"
#include "dqp/errors.hpp"

namespace dqp::le {
namespace {

std::vector<chow::Bidegree> Sorted(std::vector<chow::Bidegree> v) {
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  return v;
}

TEST(BuildLeSystem, ClassMultisets) {
  const LeSystemSpec top = build_le_system(2, 2);
  EXPECT_EQ(top.system.ambient_n, 2);
  EXPECT_EQ(top.system.ambient_m, 1);
  EXPECT_EQ(Sorted(top.system.classes), Sorted({{1, 1}, {1, 1}, {0, 2}}));

  const LeSystemSpec first = build_le_system(2, 1);
  EXPECT_EQ(first.system.ambient_n, 2);
  EXPECT_EQ(first.system.ambient_m, 1);
  EXPECT_EQ(Sorted(first.system.classes), Sorted({{1, 1}, {1, 1}, {1, 0}}));

  const LeSystemSpec p4 = build_le_system(4, 3);
  EXPECT_EQ(p4.matrix_equations, 4);
  EXPECT_EQ(p4.quadrics, 2);
  EXPECT_EQ(p4.hyperplanes, 6);
  EXPECT_EQ(p4.system.ambient_n + p4.system.ambient_m, 12);
}

TEST(BuildLeSystem, RejectsOutOfRange) {
  EXPECT_THROW(build_le_system(1, 1), ValidationError);
  EXPECT_THROW(build_le_system(3, 0), ValidationError);
  EXPECT_THROW(build_le_system(3, 4), ValidationError);
}

TEST(LeNumberViaChow, WorkedExamples) {
  EXPECT_EQ(le_number_via_chow(2, 1), 4);
  EXPECT_EQ(le_number_via_chow(2, 2), 4);
  EXPECT_EQ(le_number_via_chow(3, 2), 12);
  EXPECT_EQ(underlying_multiplicity_via_chow(2, 1), 2);
  EXPECT_EQ(underlying_multiplicity_via_chow(3, 3), 4);
  EXPECT_EQ(underlying_multiplicity_via_chow(2, 2), 2);
}

TEST(LeNumberViaChow, MatchesClosedFormTable) {
  for (int p = 2; p <= 7; ++p) {
    const LeNumberTable table = le_numbers(DqpParams::minimal(p));
    const PolarMultiplicityTable polar = polar_multiplicities_sigma1(p);
    const int q = symmetric_entry_count(p);
    for (int i = 1; i <= p; ++i) {
      EXPECT_EQ(le_number_via_chow(p, i), table.at(q - i)) << p << " " << i;
      const BigInt u = underlying_multiplicity_via_chow(p, i);
      EXPECT_EQ(u, pow2(i - 1) * binomial(p, p - i));
      EXPECT_EQ(u, polar.at(q - i));
    }
  }
}

TEST(LeNumberViaChow, RingAndFultonAgreeWhereBothApply) {
  for (int p = 2; p <= 5; ++p) {
    for (int i = 1; i <= p; ++i) {
      const auto spec = build_le_system(p, i);
      EXPECT_EQ(chow::intersection_number_ring(spec.system), chow::intersection_number_fulton(spec.system));
    }
  }
}

// Leibniz formula over all permutations: an expansion route independent of
// the cofactor recursion.
SymbolicPolynomial LeibnizDet(int p) {
  const int vars = symmetric_entry_count(p);
  std::vector<int> perm(static_cast<std::size_t>(p));
  std::iota(perm.begin(), perm.end(), 0);
  SymbolicPolynomial det(vars);
  do {
    int inversions = 0;
    for (int a = 0; a < p; ++a) {
      for (int b = a + 1; b < p; ++b) inversions += perm[a] > perm[b];
    }
    std::vector<int> e(static_cast<std::size_t>(vars), 0);
    for (int row = 0; row < p; ++row) ++e[symmetric_variable_index(p, row, perm[row])];
    det.add_term(e, inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

TEST(SymmetricDeterminant, SmallCases) {
  const auto d1 = generic_symmetric_det(1);
  EXPECT_EQ(d1.to_string(symmetric_variable_names(1)), "x11");
  const auto d2 = generic_symmetric_det(2);
  EXPECT_EQ(d2.term_count(), 2u);
  EXPECT_EQ(d2.to_string(symmetric_variable_names(2)), "x11*x22 - x12^2");
  const auto d3 = generic_symmetric_det(3);
  // x11x22x33 + 2x12x13x23 - x11x23^2 - x22x13^2 - x33x12^2.
  EXPECT_EQ(d3.term_count(), 5u);
  EXPECT_EQ(d3.total_degree(), 3);
}

TEST(SymmetricDeterminant, MatchesLeibnizExpansion) {
  for (int p = 1; p <= 7; ++p) EXPECT_EQ(generic_symmetric_det(p), LeibnizDet(p)) << p;
}

TEST(SymmetricDeterminant, HomogeneousOfDegreeP) {
  for (int p = 1; p <= kMaxSymbolicDeterminantSize; ++p) {
    const auto det = generic_symmetric_det(p);
    for (const auto& [e, c] : det.terms()) {
      EXPECT_EQ(std::accumulate(e.begin(), e.end(), 0), p);
      EXPECT_NE(c, 0);
    }
    EXPECT_EQ(det_multiplicity(p), p);
  }
  EXPECT_THROW(generic_symmetric_det(9), ValidationError);
  EXPECT_THROW(det_multiplicity(0), ValidationError);
}

TEST(SymmetricVariables, IndexLayout) {
  EXPECT_EQ(symmetric_variable_names(3), (std::vector<std::string>{"x11", "x12", "x13", "x22", "x23", "x33"}));
  EXPECT_EQ(symmetric_variable_index(3, 2, 1), symmetric_variable_index(3, 1, 2));
}

}  // namespace
}  // namespace dqp::le
