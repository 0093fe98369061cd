#include "dqp/core.hpp"

#include <sstream>

#include "dqp/errors.hpp"

namespace dqp {

namespace {

// Keeps p(p+1)/2 and the table sizes inside int.
constexpr long long kMaxAmbientDimension = 100000;

int sign_of_power(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

DqpParams validate_params(long long n, long long q, long long p) {
  std::ostringstream why;
  if (p < 1) {
    why << "p must satisfy p >= 1 (got p = " << p << ")";
  } else if (n > kMaxAmbientDimension) {
    why << "n must satisfy n <= " << kMaxAmbientDimension << " (got n = " << n << ")";
  } else if (q < p * (p + 1) / 2) {
    why << "q must satisfy q >= p(p+1)/2 = " << p * (p + 1) / 2 << " (got q = " << q << ")";
  } else if (n < q + p) {
    why << "n must satisfy n >= q + p = " << q + p << " (got n = " << n << ")";
  } else {
    return DqpParams(static_cast<int>(n), static_cast<int>(q), static_cast<int>(p));
  }
  throw ValidationError(why.str());
}

DqpParams DqpParams::minimal(int p) {
  const long long q = symmetric_entry_count(p);
  return validate_params(q + p, q, p);
}

int milnor_sphere_dimension(const DqpParams& params) {
  return params.p() + params.n() - params.q() - 1;
}

int reduced_euler_characteristic(const DqpParams& params) {
  return sign_of_power(milnor_sphere_dimension(params));
}

LeNumberTable le_numbers(const DqpParams& params) {
  const int q = params.q();
  const int p = params.p();
  LeNumberTable table{params, std::vector<BigInt>(static_cast<std::size_t>(q) + 1, 0), {}};
  for (int i = 0; i <= p; ++i) {
    table.entries[static_cast<std::size_t>(q - i)] = pow2(i) * binomial(p, p - i);
  }
  // Morse transversal type along V(I), Whitney umbrella along V(I) ∩ det X.
  table.fixed_cycles = {
      FixedCycle{"V(I)", q, 1},
      FixedCycle{"V(I) cap det(X)", q - 1, 2},
  };
  return table;
}

PolarMultiplicityTable polar_multiplicities_sigma1(int p) {
  if (p < 1) throw ValidationError("p must satisfy p >= 1");
  const int ambient = symmetric_entry_count(p);
  PolarMultiplicityTable table{p, std::vector<BigInt>(static_cast<std::size_t>(ambient), 0)};
  for (int i = 0; i < p; ++i) {
    table.entries[static_cast<std::size_t>(ambient - i - 1)] = pow2(i) * binomial(p, p - i - 1);
  }
  return table;
}

BigInt polar_alternating_sum(const PolarMultiplicityTable& table) {
  const int top = table.top_dimension();
  BigInt sum = 0;
  for (int d = 0; d <= top; ++d) {
    sum += sign_of_power(top - d) * table.at(d);
  }
  return sum;
}

int euler_obstruction_sigma1(int p) {
  const BigInt sum = polar_alternating_sum(polar_multiplicities_sigma1(p));
  const int parity_rule = (p % 2 == 0) ? 0 : 1;
  if (sum != parity_rule) {
    throw CheckFailure("Euler obstruction of Sigma_1(" + std::to_string(p) +
                       "): alternating polar sum " + sum.str() +
                       " disagrees with parity value " + std::to_string(parity_rule));
  }
  return parity_rule;
}

int euler_obstruction_hypersurface(const DqpParams& params) {
  if (params.p() <= 1) {
    throw ValidationError("Euler obstruction of the hypersurface requires p > 1 (got p = " +
                          std::to_string(params.p()) + ")");
  }
  const int codim = params.n() - params.q();
  // Contributions of the two fixed Lê cycles S(f) and Sigma_1; the polar
  // curve is empty for p > 1.
  const int value = 1 + sign_of_power(codim) +
                    sign_of_power(codim - 1) * euler_obstruction_sigma1(params.p());
  const int parity_rule = (params.p() % 2 == 0) ? 1 + sign_of_power(codim) : 1;
  if (value != parity_rule) {
    throw CheckFailure("Euler obstruction of D(q,p): fixed-cycle formula gives " +
                       std::to_string(value) + ", parity rule gives " +
                       std::to_string(parity_rule));
  }
  return value;
}

BigInt massey_alternating_sum(const LeNumberTable& table) {
  const int n = table.params.n();
  const int q = table.params.q();
  const int p = table.params.p();
  BigInt sum = 0;
  for (int i = 0; i <= p; ++i) {
    sum += sign_of_power((n - 1) - (q - i)) * table.at(q - i);
  }
  return sum;
}

bool verify_massey_identity(const DqpParams& params) {
  return massey_alternating_sum(le_numbers(params)) == reduced_euler_characteristic(params);
}

}  // namespace dqp
