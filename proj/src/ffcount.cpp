#include "dqp/ffcount.hpp"

#include <limits>
#include <string>

#include "dqp/errors.hpp"

namespace dqp::ffcount {

NormalFormSpec::NormalFormSpec(int p, int q1) : p_(p), q1_(q1) {
  if (p < 1) throw ValidationError("p must satisfy p >= 1 (got p = " + std::to_string(p) + ")");
  if (q1 < 0) throw ValidationError("q1 must satisfy q1 >= 0 (got q1 = " + std::to_string(q1) + ")");
  if (p > 64 || q1 > 64) throw ValidationError("p and q1 must be at most 64");
}

bool is_odd_prime(std::uint64_t value) {
  if (value < 3 || value % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= value; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

void check_prime(std::uint64_t prime) {
  if (prime >= (std::uint64_t{1} << 31)) {
    throw ValidationError("prime must be below 2^31 (got " + std::to_string(prime) + ")");
  }
  if (!is_odd_prime(prime)) {
    throw ValidationError("modulus must be an odd prime (got " + std::to_string(prime) + ")");
  }
}

std::uint64_t eval_normal_form(const NormalFormSpec& spec, std::span<const std::uint64_t> point,
                               std::uint64_t prime) {
  check_prime(prime);
  if (point.size() != static_cast<std::size_t>(spec.n())) {
    throw ValidationError("point has " + std::to_string(point.size()) + " coordinates, expected n = " +
                          std::to_string(spec.n()));
  }
  const int p = spec.p();
  const auto y = point.subspan(static_cast<std::size_t>(spec.y_offset()));
  std::uint64_t value = 0;
  std::size_t x = 0;
  for (int i = 0; i < p; ++i) {
    for (int j = i; j < p; ++j, ++x) {
      const std::uint64_t yy = (y[static_cast<std::size_t>(i)] % prime) *
                               (y[static_cast<std::size_t>(j)] % prime) % prime;
      value = (value + (point[x] % prime) * yy) % prime;
    }
  }
  return value;
}

BigInt predicted_count(const NormalFormSpec& spec, std::uint64_t prime) {
  const BigInt t = prime;
  return (ipow(t, static_cast<unsigned>(spec.p())) - 1) *
         ipow(t, static_cast<unsigned>(spec.n() - spec.p() - 1));
}

std::uint64_t total_points(const NormalFormSpec& spec, std::uint64_t prime) {
  const BigInt total = ipow(BigInt(prime), static_cast<unsigned>(spec.n()));
  if (total > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(total);
}

PointCountReport count_points(const NormalFormSpec& spec, std::uint64_t prime, std::uint64_t target,
                              std::uint64_t budget, int jobs) {
  check_prime(prime);
  if (target % prime == 0) {
    throw ValidationError("target must be a nonzero element of F_" + std::to_string(prime) +
                          " (got " + std::to_string(target) + ")");
  }
  if (target >= prime) {
    throw ValidationError("target must be given as a residue 1.." + std::to_string(prime - 1));
  }
  const std::uint64_t total = total_points(spec, prime);
  if (total > budget) {
    throw BudgetExceeded("enumerating " + std::to_string(prime) + "^" + std::to_string(spec.n()) +
                             " points needs a budget of " +
                             (total == std::numeric_limits<std::uint64_t>::max()
                                  ? std::string("more than 2^64")
                                  : std::to_string(total)) +
                             " (budget " + std::to_string(budget) + ")",
                         total);
  }
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t observed = kernels::count_parallel(spec, prime, target, jobs);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  return PointCountReport{spec,   prime,           target, observed, predicted_count(spec, prime),
                          total,  jobs,            std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed)};
}

IntPolynomial counting_polynomial(const NormalFormSpec& spec) {
  const IntPolynomial base = IntPolynomial::monomial(1, spec.p()) - IntPolynomial::monomial(1, 0);
  return base * IntPolynomial::monomial(1, spec.n() - spec.p() - 1);
}

std::vector<std::uint64_t> odd_primes(std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t c = 3; out.size() < count; c += 2) {
    if (is_odd_prime(c)) out.push_back(c);
  }
  return out;
}

}  // namespace dqp::ffcount
