#include "dqp/chow.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "dqp/errors.hpp"

namespace dqp::chow {
namespace {

BidegreeSystem System(int n, int m, std::vector<Bidegree> classes) { return {n, m, std::move(classes)}; }

TEST(TruncatedBivariatePoly, DropsTermsPastTheTruncation) {
  auto poly = TruncatedBivariatePoly::one(1, 1);
  poly.multiply_by_class({1, 1});
  poly.multiply_by_class({1, 1});
  // (h + k)^2 = h^2 + 2hk + k^2 with h^2 = k^2 = 0.
  EXPECT_EQ(poly.coeff(0, 0), 0);
  EXPECT_EQ(poly.coeff(1, 0), 0);
  EXPECT_EQ(poly.coeff(0, 1), 0);
  EXPECT_EQ(poly.coeff(1, 1), 2);
}

TEST(Intersection, WorkedExamples) {
  const auto square = System(1, 1, {{1, 1}, {1, 1}});
  EXPECT_EQ(intersection_number_ring(square), 2);
  EXPECT_EQ(intersection_number_fulton(square), 2);

  const auto quadric = System(2, 1, {{1, 1}, {1, 1}, {0, 2}});
  EXPECT_EQ(intersection_number_ring(quadric), 2);
  EXPECT_EQ(intersection_number_fulton(quadric), 2);

  const auto hyperplane = System(2, 1, {{1, 1}, {1, 1}, {1, 0}});
  EXPECT_EQ(intersection_number_ring(hyperplane), 2);
  EXPECT_EQ(intersection_number_fulton(hyperplane), 2);

  // Bezout on P^2: two conics meet in four points.
  const auto conics = System(2, 0, {{2, 0}, {2, 0}});
  EXPECT_EQ(intersection_number_ring(conics), 4);
  EXPECT_EQ(intersection_number_fulton(conics), 4);

  // A point: the empty product.
  EXPECT_EQ(intersection_number_ring(System(0, 0, {})), 1);
  EXPECT_EQ(intersection_number_fulton(System(0, 0, {})), 1);
}

TEST(Intersection, RejectsMalformedSystems) {
  EXPECT_THROW(intersection_number_ring(System(1, 1, {{1, 1}})), ValidationError);
  EXPECT_THROW(intersection_number_fulton(System(1, 1, {{1, 1}, {1, 1}, {1, 1}})), ValidationError);
  EXPECT_THROW(intersection_number_fulton(System(1, 1, {{1, 1}, {0, 0}})), ValidationError);
  EXPECT_THROW(intersection_number_ring(System(1, 1, {{1, 1}, {0, 0}})), ValidationError);
  EXPECT_THROW(intersection_number_ring(System(1, 1, {{1, 1}, {-1, 2}})), ValidationError);
  EXPECT_THROW(intersection_number_ring(System(-1, 1, {})), ValidationError);
}

TEST(Intersection, FultonRouteIsBounded) {
  BidegreeSystem big{20, 5, std::vector<Bidegree>(25, Bidegree{1, 1})};
  EXPECT_THROW(intersection_number_fulton(big), ValidationError);
  // (h+k)^25 on P^20 x P^5: C(25, 5).
  EXPECT_EQ(intersection_number_ring(big), 53130);
}

TEST(Intersection, RingAgreesWithFultonOnRandomSystems) {
  for (std::uint64_t c = 0; c < 500; ++c) {
    const BidegreeSystem s = random_system(7, c, 12, 3);
    ASSERT_LE(s.ambient_n + s.ambient_m, 12);
    EXPECT_EQ(intersection_number_ring(s), intersection_number_fulton(s)) << c;
  }
}

TEST(Intersection, PermutationInvariance) {
  std::mt19937_64 rng(11);
  for (std::uint64_t c = 0; c < 100; ++c) {
    BidegreeSystem s = random_system(3, c, 10, 3);
    const BigInt base = intersection_number_ring(s);
    for (int round = 0; round < 3; ++round) {
      std::shuffle(s.classes.begin(), s.classes.end(), rng);
      EXPECT_EQ(intersection_number_ring(s), base);
      EXPECT_EQ(intersection_number_fulton(s), base);
    }
  }
}

TEST(Intersection, MultilinearInEachClass) {
  int checked = 0;
  for (std::uint64_t c = 0; c < 200; ++c) {
    const BidegreeSystem s = random_system(5, c, 10, 3);
    for (std::size_t i = 0; i < s.classes.size(); ++i) {
      const Bidegree cls = s.classes[i];
      if (cls.a == 0 || cls.b == 0) continue;
      BidegreeSystem h_part = s;
      BidegreeSystem k_part = s;
      h_part.classes[i] = {cls.a, 0};
      k_part.classes[i] = {0, cls.b};
      EXPECT_EQ(intersection_number_ring(h_part) + intersection_number_ring(k_part), intersection_number_ring(s));
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Intersection, VanishesWithoutEnoughFactors) {
  // Three classes without h on P^2 x P^2: only two k-factors are available.
  const auto s = System(2, 2, {{0, 1}, {0, 3}, {0, 2}, {1, 1}});
  EXPECT_EQ(intersection_number_ring(s), 0);
  EXPECT_EQ(intersection_number_fulton(s), 0);
  const auto t = System(1, 2, {{1, 0}, {2, 0}, {1, 1}});
  EXPECT_EQ(intersection_number_ring(t), 0);
  EXPECT_EQ(intersection_number_fulton(t), 0);
}

TEST(ParseBidegrees, AcceptsBothNotations) {
  const std::vector<Bidegree> expected{{1, 1}, {1, 1}, {0, 2}};
  EXPECT_EQ(parse_bidegrees("1,1;1,1;0,2"), expected);
  EXPECT_EQ(parse_bidegrees("(1,1), (1,1), (0,2)"), expected);
  EXPECT_THROW(parse_bidegrees("1,1;2"), ValidationError);
  EXPECT_THROW(parse_bidegrees("1,a"), ValidationError);
  EXPECT_THROW(parse_bidegrees("-1,2"), ValidationError);
}

TEST(RandomSystem, DeterministicPerCase) {
  const auto a = random_system(42, 17, 12, 3);
  const auto b = random_system(42, 17, 12, 3);
  EXPECT_EQ(a.ambient_n, b.ambient_n);
  EXPECT_EQ(a.classes, b.classes);
  EXPECT_NO_THROW(validate(a));
}

}  // namespace
}  // namespace dqp::chow
