#include "dqp/closure.hpp"

#include <random>

#include <gtest/gtest.h>

#include "dqp/errors.hpp"
#include "dqp/ideal_parse.hpp"

namespace dqp::closure {
namespace {

Monomial M(std::vector<int> e) { return Monomial{std::move(e)}; }

MonomialIdeal Parse(const std::string& text, int vars) { return to_ideal(parse_monomials(text), vars); }
Monomial ParseOne(const std::string& text, int vars) {
  const auto parsed = parse_monomials(text);
  EXPECT_EQ(parsed.monomials.size(), 1u);
  return to_monomial(parsed.monomials.front(), vars);
}

// Two variables: the Newton polyhedron meets a - R^2_{>=0} iff some segment
// between two generators (possibly equal) does.
bool SegmentOracle(const MonomialIdeal& ideal, const Monomial& m) {
  const auto& gens = ideal.generators();
  for (const auto& g : gens) {
    for (const auto& h : gens) {
      // lambda*g + (1-lambda)*h <= a, lambda in [0,1].
      Rational lo = 0;
      Rational hi = 1;
      for (int j = 0; j < 2; ++j) {
        const Rational slope = g.exponents[j] - h.exponents[j];
        const Rational rhs = m.exponents[j] - h.exponents[j];
        if (slope > 0) {
          hi = std::min<Rational>(hi, rhs / slope);
        } else if (slope < 0) {
          lo = std::max<Rational>(lo, rhs / slope);
        } else if (rhs < 0) {
          lo = 1;
          hi = 0;
        }
      }
      if (lo <= hi) return true;
    }
  }
  return false;
}

MonomialIdeal RandomIdeal(std::mt19937_64& rng, int vars, int max_gens, int max_exp) {
  std::uniform_int_distribution<int> count(1, max_gens);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::vector<Monomial> gens;
  const int k = count(rng);
  for (int g = 0; g < k; ++g) {
    std::vector<int> e(static_cast<std::size_t>(vars));
    for (auto& x : e) x = exp(rng);
    gens.push_back(M(e));
  }
  return MonomialIdeal(vars, gens);
}

Monomial RandomMonomial(std::mt19937_64& rng, int vars, int max_exp) {
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::vector<int> e(static_cast<std::size_t>(vars));
  for (auto& x : e) x = exp(rng);
  return M(e);
}

TEST(MonomialIdeal, MinimalGenerators) {
  const MonomialIdeal i(2, {M({1, 0}), M({2, 1}), M({1, 0}), M({0, 3})});
  EXPECT_EQ(i.generators().size(), 2u);
  EXPECT_TRUE(i.contains(M({5, 0})));
  EXPECT_FALSE(i.contains(M({0, 2})));
  EXPECT_EQ(i.min_generator_degree(), 1);
  EXPECT_THROW(MonomialIdeal(2, {}), ValidationError);
  EXPECT_THROW(MonomialIdeal(2, {M({1})}), ValidationError);
}

TEST(MonomialIdeal, Powers) {
  EXPECT_EQ(power_ideal(variables_ideal(2), 2), Parse("y1^2, y1*y2, y2^2", 2));
  EXPECT_EQ(power_ideal(variables_ideal(3), 3).generators().size(), 10u);
  EXPECT_EQ(power_ideal(Parse("y1^2, y2^3", 2), 2), Parse("y1^4, y1^2 y2^3, y2^6", 2));
  EXPECT_THROW(power_ideal(variables_ideal(2), 0), ValidationError);
}

TEST(Newton, WorkedExamples) {
  const auto ideal = Parse("x1^3, x2^3", 2);
  const auto cert = newton_certificate(ideal, ParseOne("x1^2 x2^2", 2));
  ASSERT_TRUE(cert);
  EXPECT_TRUE(in_integral_closure_newton(ideal, ParseOne("x1^2 x2^2", 2)));
  EXPECT_TRUE(in_integral_closure_newton(ideal, ParseOne("x1^2 x2", 2)));
  EXPECT_FALSE(in_integral_closure_newton(ideal, ParseOne("x1 x2", 2)));
  EXPECT_FALSE(in_integral_closure_newton(ideal, ParseOne("x1^2", 2)));

  // y1 y2 is integral over (y1^2, y2^2) but not a member of it.
  const auto squares = pure_powers_ideal(2, 2);
  EXPECT_FALSE(squares.contains(M({1, 1})));
  EXPECT_TRUE(in_integral_closure_newton(squares, M({1, 1})));
}

TEST(Newton, CertificateIsConvexAndDominated) {
  std::mt19937_64 rng(5);
  for (int c = 0; c < 200; ++c) {
    const auto ideal = RandomIdeal(rng, 3, 4, 5);
    const auto m = RandomMonomial(rng, 3, 6);
    const auto cert = newton_certificate(ideal, m);
    if (!cert) continue;
    ASSERT_EQ(cert->size(), ideal.generators().size());
    Rational total = 0;
    std::vector<Rational> point(3, Rational(0));
    for (std::size_t g = 0; g < cert->size(); ++g) {
      EXPECT_GE((*cert)[g], 0);
      total += (*cert)[g];
      for (int j = 0; j < 3; ++j) point[j] += (*cert)[g] * ideal.generators()[g].exponents[j];
    }
    EXPECT_EQ(total, 1);
    for (int j = 0; j < 3; ++j) EXPECT_LE(point[j], m.exponents[j]);
  }
}

TEST(Newton, MatchesSegmentOracleInTwoVariables) {
  std::mt19937_64 rng(17);
  for (int c = 0; c < 500; ++c) {
    const auto ideal = RandomIdeal(rng, 2, 4, 7);
    const auto m = RandomMonomial(rng, 2, 8);
    EXPECT_EQ(in_integral_closure_newton(ideal, m), SegmentOracle(ideal, m)) << c;
  }
}

TEST(Valuative, FacetNormalsDecideMembership) {
  std::mt19937_64 rng(23);
  for (int vars = 2; vars <= 4; ++vars) {
    for (int c = 0; c < 60; ++c) {
      const auto ideal = RandomIdeal(rng, vars, 4, 4);
      const auto normals = newton_facet_normals(ideal);
      ASSERT_FALSE(normals.empty());
      for (int t = 0; t < 4; ++t) {
        const auto m = RandomMonomial(rng, vars, 5);
        EXPECT_EQ(in_integral_closure_newton(ideal, m), in_integral_closure_valuative(ideal, m, normals));
      }
    }
  }
  EXPECT_THROW(newton_facet_normals(variables_ideal(5)), ValidationError);
}

TEST(Valuative, MembershipImpliesEveryCurveInequality) {
  std::mt19937_64 rng(29);
  for (int c = 0; c < 200; ++c) {
    const int vars = 2 + c % 4;
    const auto ideal = RandomIdeal(rng, vars, 4, 4);
    const auto m = RandomMonomial(rng, vars, 5);
    const auto witnesses = default_witnesses(vars, static_cast<std::uint64_t>(c));
    if (in_integral_closure_newton(ideal, m)) {
      EXPECT_TRUE(in_integral_closure_valuative(ideal, m, witnesses));
      EXPECT_FALSE(valuative_refutation(ideal, m, witnesses));
    }
  }
}

TEST(Valuative, RefutationWitness) {
  const auto ideal = Parse("x1^3, x2^3", 2);
  const auto normals = newton_facet_normals(ideal);
  const auto refutation = valuative_refutation(ideal, ParseOne("x1 x2", 2), normals);
  ASSERT_TRUE(refutation);
  const Rational lhs = refutation->order_of(M({1, 1}));
  EXPECT_LT(lhs, std::min(refutation->order_of(M({3, 0})), refutation->order_of(M({0, 3}))));
}

TEST(WeightVector, Validation) {
  EXPECT_THROW(WeightVector::from_integers({0, 0}), ValidationError);
  EXPECT_THROW(WeightVector::from_integers({1, -1}), ValidationError);
  EXPECT_EQ(WeightVector::from_integers({2, 3}).order_of(M({1, 2})), 8);
  const auto w = default_witnesses(3, 1, 10);
  EXPECT_EQ(w.size(), 14u);
  EXPECT_EQ(default_witnesses(3, 1, 10), w);
}

TEST(Closure, MonotoneInTheIdeal) {
  std::mt19937_64 rng(31);
  for (int c = 0; c < 200; ++c) {
    const auto small = RandomIdeal(rng, 3, 3, 4);
    auto gens = small.generators();
    gens.push_back(RandomMonomial(rng, 3, 4));
    const MonomialIdeal large(3, gens);
    const auto m = RandomMonomial(rng, 3, 5);
    if (in_integral_closure_newton(small, m)) {
      EXPECT_TRUE(in_integral_closure_newton(large, m));
    }
  }
}

TEST(Closure, DegreeIsBoundedBelow) {
  std::mt19937_64 rng(37);
  for (int c = 0; c < 200; ++c) {
    const auto ideal = RandomIdeal(rng, 3, 4, 4);
    const auto m = RandomMonomial(rng, 3, 5);
    if (m.total_degree() < ideal.min_generator_degree()) {
      EXPECT_FALSE(in_integral_closure_newton(ideal, m));
    }
  }
}

TEST(Reduction, SquaresReduceSquareOfMaximalIdeal) {
  for (int p = 1; p <= 6; ++p) {
    const auto squares = pure_powers_ideal(p, 2);
    const auto full = power_ideal(variables_ideal(p), 2);
    EXPECT_TRUE(is_reduction(squares, full)) << p;
    if (p >= 2) {
      EXPECT_FALSE(squares == full);
    }
  }
}

TEST(Reduction, NonExamples) {
  // (y1^2) misses y2^2.
  EXPECT_FALSE(is_reduction(Parse("y1^2", 2), power_ideal(variables_ideal(2), 2)));
  // Not contained.
  EXPECT_FALSE(is_reduction(Parse("y1", 2), power_ideal(variables_ideal(2), 2)));
  EXPECT_TRUE(is_reduction(Parse("y1^3, y2^3", 2), power_ideal(variables_ideal(2), 3)));
  EXPECT_FALSE(is_reduction(Parse("y1^3, y2^3", 2), Parse("y1^3, y1 y2, y2^3", 2)));
}

TEST(Reduction, Transitive) {
  for (int p = 2; p <= 4; ++p) {
    const auto a = pure_powers_ideal(p, 4);
    const auto b = power_ideal(pure_powers_ideal(p, 2), 2);
    const auto c = power_ideal(variables_ideal(p), 4);
    ASSERT_TRUE(is_reduction(a, b));
    ASSERT_TRUE(is_reduction(b, c));
    EXPECT_TRUE(is_reduction(a, c));
  }
}

TEST(Reduction, GeneratorCount) {
  for (int p = 1; p <= 10; ++p) {
    const auto r = reduction_generator_count(p);
    EXPECT_EQ(r.generators, 2 * p);
    EXPECT_EQ(r.fiber_dimension_bound, 2 * p - 1);
  }
}

TEST(Parse, Grammar) {
  const auto parsed = parse_monomials(" y1^2 * y3, y2y1 ,1");
  EXPECT_EQ(parsed.letter, 'y');
  EXPECT_EQ(parsed.max_index, 3);
  ASSERT_EQ(parsed.monomials.size(), 3u);
  EXPECT_EQ(to_monomial(parsed.monomials[0], 3), M({2, 0, 1}));
  EXPECT_EQ(to_monomial(parsed.monomials[1], 3), M({1, 1, 0}));
  EXPECT_EQ(to_monomial(parsed.monomials[2], 3), M({0, 0, 0}));
  EXPECT_EQ(to_monomial(parse_monomials("x1 x1^2").monomials[0], 1), M({3}));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_monomials(""), ValidationError);
  EXPECT_THROW(parse_monomials("y0"), ValidationError);
  EXPECT_THROW(parse_monomials("x1, y2"), ValidationError);
  EXPECT_THROW(parse_monomials("y1^"), ValidationError);
  EXPECT_THROW(parse_monomials("z1"), ValidationError);
  EXPECT_THROW(parse_monomials("y1,,y2"), ValidationError);
  EXPECT_THROW(parse_monomials("y65"), ValidationError);
  const auto a = parse_monomials("x1");
  const auto b = parse_monomials("y1");
  EXPECT_THROW(common_letter({&a, &b}), ValidationError);
}

}  // namespace
}  // namespace dqp::closure
