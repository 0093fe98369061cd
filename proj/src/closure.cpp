#include "dqp/closure.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "dqp/errors.hpp"
#include "dqp/rational_lp.hpp"

namespace dqp::closure {

namespace {

void check_dimension(const MonomialIdeal& ideal, int variable_count, const char* what) {
  if (ideal.variable_count() != variable_count) {
    throw ValidationError(std::string(what) + " has " + std::to_string(variable_count) +
                          " variables, ideal has " + std::to_string(ideal.variable_count()));
  }
}

BigInt determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t size = m.size();
  if (size == 0) return 1;
  if (size == 1) return m[0][0];
  BigInt det = 0;
  for (std::size_t col = 0; col < size; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < size; ++r) {
      std::vector<BigInt> row;
      for (std::size_t c = 0; c < size; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    const BigInt sub = determinant(std::move(minor));
    det += (col % 2 == 0 ? 1 : -1) * m[0][col] * sub;
  }
  return det;
}

// Vector orthogonal to n-1 rows in Z^n: signed maximal minors.
std::vector<BigInt> orthogonal_complement(const std::vector<std::vector<BigInt>>& rows, std::size_t n) {
  std::vector<BigInt> w(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<BigInt>> minor;
    for (const auto& row : rows) {
      std::vector<BigInt> r;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) r.push_back(row[c]);
      }
      minor.push_back(std::move(r));
    }
    w[j] = (j % 2 == 0 ? 1 : -1) * determinant(std::move(minor));
  }
  return w;
}

BigInt dot(const std::vector<BigInt>& w, const Monomial& m) {
  BigInt s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * m.exponents[i];
  return s;
}

}  // namespace

WeightVector::WeightVector(std::vector<Rational> weights) : weights_(std::move(weights)) {
  bool positive = false;
  for (const Rational& w : weights_) {
    if (w < 0) throw ValidationError("weight vectors must be componentwise nonnegative");
    if (w > 0) positive = true;
  }
  if (!positive) throw ValidationError("weight vectors must have a positive entry");
}

WeightVector WeightVector::from_integers(const std::vector<long long>& weights) {
  std::vector<Rational> r;
  r.reserve(weights.size());
  for (long long w : weights) r.emplace_back(w);
  return WeightVector(std::move(r));
}

Rational WeightVector::order_of(const Monomial& m) const {
  if (m.variable_count() != variable_count()) {
    throw ValidationError("weight vector has " + std::to_string(variable_count()) +
                          " entries, monomial has " + std::to_string(m.variable_count()));
  }
  Rational s = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) s += weights_[i] * m.exponents[i];
  return s;
}

std::optional<std::vector<Rational>> newton_certificate(const MonomialIdeal& ideal, const Monomial& m) {
  check_dimension(ideal, m.variable_count(), "monomial");
  const auto& gens = ideal.generators();
  const std::size_t n = static_cast<std::size_t>(ideal.variable_count());
  const std::size_t g = gens.size();
  // Unknowns: mu_1..mu_g, then one slack per coordinate.
  //   sum_k mu_k * gens[k][j] + s_j = a_j    (j = 1..n)
  //   sum_k mu_k                   = 1
  lp::Matrix a(n + 1, std::vector<Rational>(g + n));
  std::vector<Rational> b(n + 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < g; ++k) a[j][k] = gens[k].exponents[j];
    a[j][g + j] = 1;
    b[j] = m.exponents[j];
  }
  for (std::size_t k = 0; k < g; ++k) a[n][k] = 1;
  b[n] = 1;
  auto point = lp::find_feasible_point(a, b);
  if (!point) return std::nullopt;
  point->resize(g);
  return point;
}

bool in_integral_closure_newton(const MonomialIdeal& ideal, const Monomial& m) {
  return newton_certificate(ideal, m).has_value();
}

std::optional<WeightVector> valuative_refutation(const MonomialIdeal& ideal, const Monomial& m,
                                                 std::span<const WeightVector> witnesses) {
  check_dimension(ideal, m.variable_count(), "monomial");
  for (const WeightVector& w : witnesses) {
    check_dimension(ideal, w.variable_count(), "weight vector");
    const Rational lhs = w.order_of(m);
    bool dominated = false;
    for (const Monomial& g : ideal.generators()) {
      if (lhs >= w.order_of(g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return w;
  }
  return std::nullopt;
}

bool in_integral_closure_valuative(const MonomialIdeal& ideal, const Monomial& m,
                                   std::span<const WeightVector> witnesses) {
  return !valuative_refutation(ideal, m, witnesses).has_value();
}

std::vector<WeightVector> default_witnesses(int variable_count, std::uint64_t seed, int random_count) {
  const auto n = static_cast<std::size_t>(variable_count);
  std::vector<WeightVector> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long long> e(n, 0);
    e[i] = 1;
    out.push_back(WeightVector::from_integers(e));
  }
  out.push_back(WeightVector::from_integers(std::vector<long long>(n, 1)));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> entry(0, 5);
  for (int k = 0; k < random_count; ++k) {
    std::vector<long long> w(n);
    do {
      for (auto& x : w) x = entry(rng);
    } while (std::all_of(w.begin(), w.end(), [](long long x) { return x == 0; }));
    out.push_back(WeightVector::from_integers(w));
  }
  return out;
}

std::vector<WeightVector> newton_facet_normals(const MonomialIdeal& ideal) {
  const int nvars = ideal.variable_count();
  if (nvars > kMaxFacetEnumerationVariables) {
    throw ValidationError("facet enumeration is limited to " +
                          std::to_string(kMaxFacetEnumerationVariables) + " variables");
  }
  const auto n = static_cast<std::size_t>(nvars);
  const auto& gens = ideal.generators();
  std::set<std::vector<BigInt>> normals;

  for (std::size_t base = 0; base < gens.size(); ++base) {
    // Candidate spanning directions: other generators relative to the base
    // vertex, and the coordinate rays of the recession cone.
    std::vector<std::vector<BigInt>> pool;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (k == base) continue;
      std::vector<BigInt> d(n);
      for (std::size_t j = 0; j < n; ++j) d[j] = gens[k].exponents[j] - gens[base].exponents[j];
      pool.push_back(std::move(d));
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<BigInt> e(n, 0);
      e[j] = 1;
      pool.push_back(std::move(e));
    }
    const std::size_t choose = n - 1;
    if (pool.size() < choose) continue;

    std::vector<bool> pick(pool.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(choose), true);
    do {
      std::vector<std::vector<BigInt>> rows;
      for (std::size_t k = 0; k < pool.size(); ++k) {
        if (pick[k]) rows.push_back(pool[k]);
      }
      std::vector<BigInt> w = orthogonal_complement(rows, n);
      const bool any_pos = std::any_of(w.begin(), w.end(), [](const BigInt& x) { return x > 0; });
      const bool any_neg = std::any_of(w.begin(), w.end(), [](const BigInt& x) { return x < 0; });
      if (any_pos == any_neg) continue;  // zero, or a normal with mixed signs
      if (any_neg) {
        for (auto& x : w) x = -x;
      }
      const BigInt level = dot(w, gens[base]);
      const bool supporting = std::all_of(gens.begin(), gens.end(),
                                          [&](const Monomial& g) { return dot(w, g) >= level; });
      if (!supporting) continue;
      BigInt common = 0;
      for (const auto& x : w) common = boost::multiprecision::gcd(common, x);
      for (auto& x : w) x /= common;
      normals.insert(std::move(w));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }

  std::vector<WeightVector> out;
  for (const auto& w : normals) {
    std::vector<Rational> r(w.begin(), w.end());
    out.emplace_back(std::move(r));
  }
  return out;
}

bool is_reduction(const MonomialIdeal& sub, const MonomialIdeal& full) {
  if (sub.variable_count() != full.variable_count()) {
    throw ValidationError("ideals have different variable counts (" +
                          std::to_string(sub.variable_count()) + " vs " +
                          std::to_string(full.variable_count()) + ")");
  }
  if (!sub.is_subset_of(full)) return false;
  return std::all_of(full.generators().begin(), full.generators().end(),
                     [&](const Monomial& g) { return in_integral_closure_newton(sub, g); });
}

ReductionGeneratorCount reduction_generator_count(int p) {
  if (p < 1) throw ValidationError("p must satisfy p >= 1");
  return {p, 2 * p, 2 * p - 1};
}

}  // namespace dqp::closure
