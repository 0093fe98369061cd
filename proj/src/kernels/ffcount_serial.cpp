#include <vector>

#include "dqp/ffcount.hpp"

namespace dqp::ffcount::kernels {

std::uint64_t count_serial(const NormalFormSpec& spec, std::uint64_t prime, std::uint64_t target) {
  check_prime(prime);
  const auto n = static_cast<std::size_t>(spec.n());
  std::vector<std::uint64_t> point(n, 0);
  std::uint64_t count = 0;
  while (true) {
    if (eval_normal_form(spec, point, prime) == target % prime) ++count;
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++point[k] < prime) break;
      point[k] = 0;
      if (k == 0) return count;
    }
  }
}

}  // namespace dqp::ffcount::kernels
