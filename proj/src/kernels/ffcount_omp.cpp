#include <algorithm>
#include <vector>

#include <omp.h>

#include "dqp/ffcount.hpp"

namespace dqp::ffcount::kernels {

namespace {

constexpr std::uint64_t kChunk = std::uint64_t{1} << 16;

// Enumeration state: digits[0..p) are y, then the matrix entries, then the
// inert coordinates; the last digit changes fastest.
class Odometer {
 public:
  Odometer(const NormalFormSpec& spec, std::uint64_t prime, std::uint64_t index)
      : p_(static_cast<std::size_t>(spec.p())),
        prime_(prime),
        digits_(static_cast<std::size_t>(spec.n()), 0),
        coeffs_(digits_.size(), 0) {
    for (std::size_t k = digits_.size(); k > 0 && index > 0; --k) {
      digits_[k - 1] = index % prime;
      index /= prime;
    }
    refresh();
  }

  std::uint64_t value() const { return value_; }

  void advance() {
    std::size_t k = digits_.size();
    while (k > p_) {
      --k;
      if (digits_[k] + 1 < prime_) {
        ++digits_[k];
        value_ = (value_ + coeffs_[k]) % prime_;
        return;
      }
      // Wrapping from prime - 1 to 0 removes (prime - 1) * c.
      value_ = (value_ + coeffs_[k]) % prime_;
      digits_[k] = 0;
    }
    while (k > 0) {
      --k;
      if (++digits_[k] < prime_) break;
      digits_[k] = 0;
    }
    refresh();
  }

 private:
  void refresh() {
    // Coefficient of x_{ij} is y_i y_j; inert coordinates contribute nothing.
    std::size_t k = p_;
    for (std::size_t i = 0; i < p_; ++i) {
      for (std::size_t j = i; j < p_; ++j, ++k) coeffs_[k] = digits_[i] * digits_[j] % prime_;
    }
    std::fill(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end(), 0);
    value_ = 0;
    for (std::size_t m = p_; m < digits_.size(); ++m) value_ = (value_ + coeffs_[m] * digits_[m]) % prime_;
  }

  std::size_t p_;
  std::uint64_t prime_;
  std::vector<std::uint64_t> digits_;
  std::vector<std::uint64_t> coeffs_;
  std::uint64_t value_ = 0;
};

}  // namespace

std::uint64_t count_range(const NormalFormSpec& spec, std::uint64_t prime, std::uint64_t target,
                          std::uint64_t begin, std::uint64_t end) {
  if (begin >= end) return 0;
  const std::uint64_t wanted = target % prime;
  Odometer odometer(spec, prime, begin);
  std::uint64_t count = 0;
  for (std::uint64_t index = begin; index < end; ++index) {
    if (odometer.value() == wanted) ++count;
    if (index + 1 < end) odometer.advance();
  }
  return count;
}

std::uint64_t count_parallel(const NormalFormSpec& spec, std::uint64_t prime, std::uint64_t target,
                             int jobs) {
  check_prime(prime);
  const std::uint64_t total = total_points(spec, prime);
  // y = 0 block: prime^(n - p) points, all with f = 0.
  std::uint64_t slab = 1;
  for (int k = 0; k < spec.n() - spec.p(); ++k) slab *= prime;
  const std::uint64_t span = total - slab;
  const auto chunks = static_cast<long long>((span + kChunk - 1) / kChunk);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();

  std::uint64_t count = 0;
#pragma omp parallel for num_threads(threads) schedule(dynamic) reduction(+ : count)
  for (long long c = 0; c < chunks; ++c) {
    const std::uint64_t begin = slab + static_cast<std::uint64_t>(c) * kChunk;
    const std::uint64_t end = std::min(begin + kChunk, total);
    count += count_range(spec, prime, target, begin, end);
  }
  // Every point of the skipped block has f = 0.
  if (target % prime == 0) count += slab;
  return count;
}

}  // namespace dqp::ffcount::kernels
