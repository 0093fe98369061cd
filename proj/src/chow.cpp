#include "dqp/chow.hpp"

#include <cctype>
#include <random>
#include <sstream>

#include "dqp/errors.hpp"

namespace dqp::chow {

void validate(const BidegreeSystem& system) {
  std::ostringstream why;
  if (system.ambient_n < 0 || system.ambient_m < 0) {
    why << "ambient dimensions must be nonnegative (got n = " << system.ambient_n
        << ", m = " << system.ambient_m << ")";
    throw ValidationError(why.str());
  }
  const auto expected = static_cast<std::size_t>(system.ambient_n) + system.ambient_m;
  if (system.classes.size() != expected) {
    why << "a zero-dimensional intersection needs n + m = " << expected << " classes (got "
        << system.classes.size() << ")";
    throw ValidationError(why.str());
  }
  for (std::size_t i = 0; i < system.classes.size(); ++i) {
    const Bidegree& c = system.classes[i];
    if (c.a < 0 || c.b < 0) {
      why << "class " << i + 1 << " has a negative degree (" << c.a << "," << c.b << ")";
      throw ValidationError(why.str());
    }
    if (c.a == 0 && c.b == 0) {
      why << "class " << i + 1 << " has bidegree (0,0), which is not a hypersurface";
      throw ValidationError(why.str());
    }
  }
}

TruncatedBivariatePoly::TruncatedBivariatePoly(int ambient_n, int ambient_m)
    : ambient_n_(ambient_n),
      ambient_m_(ambient_m),
      coeffs_(static_cast<std::size_t>(ambient_n + 1) * static_cast<std::size_t>(ambient_m + 1),
              0) {}

TruncatedBivariatePoly TruncatedBivariatePoly::one(int ambient_n, int ambient_m) {
  TruncatedBivariatePoly poly(ambient_n, ambient_m);
  poly.coeff(0, 0) = 1;
  return poly;
}

std::size_t TruncatedBivariatePoly::index(int u, int v) const {
  return static_cast<std::size_t>(u) * static_cast<std::size_t>(ambient_m_ + 1) +
         static_cast<std::size_t>(v);
}

const BigInt& TruncatedBivariatePoly::coeff(int u, int v) const { return coeffs_.at(index(u, v)); }

BigInt& TruncatedBivariatePoly::coeff(int u, int v) { return coeffs_.at(index(u, v)); }

void TruncatedBivariatePoly::multiply_by_class(const Bidegree& cls) {
  // Walk from the top corner down so each source coefficient is read before
  // it is overwritten.
  for (int u = ambient_n_; u >= 0; --u) {
    for (int v = ambient_m_; v >= 0; --v) {
      BigInt next = 0;
      if (u > 0) next += cls.a * coeff(u - 1, v);
      if (v > 0) next += cls.b * coeff(u, v - 1);
      coeff(u, v) = std::move(next);
    }
  }
}

BigInt intersection_number_ring(const BidegreeSystem& system) {
  validate(system);
  auto product = TruncatedBivariatePoly::one(system.ambient_n, system.ambient_m);
  for (const Bidegree& cls : system.classes) product.multiply_by_class(cls);
  return product.coeff(system.ambient_n, system.ambient_m);
}

BigInt intersection_number_fulton(const BidegreeSystem& system) {
  validate(system);
  const int total = system.ambient_n + system.ambient_m;
  if (total > kFultonMaxClasses) {
    throw ValidationError("subset-sum route is limited to n + m <= " +
                          std::to_string(kFultonMaxClasses) + " (got " + std::to_string(total) +
                          "); use the ring algorithm");
  }
  const int n = system.ambient_n;
  BigInt sum = 0;
  // Gosper's hack walks the n-element subsets of {0..total-1} as bitmasks.
  const std::uint64_t limit = std::uint64_t{1} << total;
  std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  while (mask < limit) {
    BigInt term = 1;
    for (int i = 0; i < total && term != 0; ++i) {
      const Bidegree& c = system.classes[static_cast<std::size_t>(i)];
      term *= ((mask >> i) & 1U) ? c.a : c.b;
    }
    sum += term;
    if (mask == 0) break;
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  return sum;
}

std::vector<Bidegree> parse_bidegrees(const std::string& text) {
  std::vector<int> numbers;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t end = i;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end - i > 6) throw ValidationError("bidegree entry too large: " + text.substr(i, end - i));
      numbers.push_back(std::stoi(text.substr(i, end - i)));
      i = end;
    } else if (ch == ',' || ch == ';' || ch == '(' || ch == ')' || ch == '[' || ch == ']' ||
               std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else {
      throw ValidationError(std::string("unexpected character '") + ch + "' in bidegree list");
    }
  }
  if (numbers.size() % 2 != 0) {
    throw ValidationError("bidegree list must contain an even number of integers");
  }
  std::vector<Bidegree> out;
  for (std::size_t k = 0; k < numbers.size(); k += 2) out.push_back({numbers[k], numbers[k + 1]});
  return out;
}

BidegreeSystem random_system(std::uint64_t seed, std::uint64_t case_index, int max_classes,
                             int max_entry) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(case_index),
                    static_cast<std::uint32_t>(case_index >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> total_dist(1, max_classes);
  std::uniform_int_distribution<int> entry(0, max_entry);
  BidegreeSystem system;
  const int total = total_dist(rng);
  system.ambient_n = std::uniform_int_distribution<int>(0, total)(rng);
  system.ambient_m = total - system.ambient_n;
  for (int i = 0; i < total; ++i) {
    Bidegree c{entry(rng), entry(rng)};
    while (c.a == 0 && c.b == 0) c = {entry(rng), entry(rng)};
    system.classes.push_back(c);
  }
  return system;
}

}  // namespace dqp::chow
