#pragma once

// Intersection numbers of hypersurface classes on P^N x P^M. A hypersurface of
// bidegree (a, b) has class a*h + b*k where h, k pull back the hyperplane
// classes of the two factors; the Chow ring is Z[h, k] / (h^{N+1}, k^{M+1}).

#include <cstdint>
#include <string>
#include <vector>

#include "dqp/bigint.hpp"

namespace dqp::chow {

struct Bidegree {
  int a = 0;
  int b = 0;

  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

struct BidegreeSystem {
  int ambient_n = 0;
  int ambient_m = 0;
  std::vector<Bidegree> classes;
};

/// Throws ValidationError unless the system cuts out a zero-dimensional cycle:
/// nonnegative dimensions, no (0,0) or negative class, N + M classes.
void validate(const BidegreeSystem& system);

/// Coefficients of h^u k^v for 0 <= u <= N, 0 <= v <= M.
class TruncatedBivariatePoly {
 public:
  TruncatedBivariatePoly(int ambient_n, int ambient_m);

  static TruncatedBivariatePoly one(int ambient_n, int ambient_m);

  const BigInt& coeff(int u, int v) const;
  BigInt& coeff(int u, int v);

  /// *this *= (a*h + b*k), dropping terms past the truncation.
  void multiply_by_class(const Bidegree& cls);

  int ambient_n() const { return ambient_n_; }
  int ambient_m() const { return ambient_m_; }

 private:
  std::size_t index(int u, int v) const;

  int ambient_n_;
  int ambient_m_;
  std::vector<BigInt> coeffs_;
};

/// Coefficient of h^N k^M in the truncated product of all classes.
BigInt intersection_number_ring(const BidegreeSystem& system);

/// Largest N + M accepted by the subset-sum route.
inline constexpr int kFultonMaxClasses = 24;

/// Sum over N-subsets S of the classes of prod_{i in S} a_i * prod_{j not in S} b_j.
BigInt intersection_number_fulton(const BidegreeSystem& system);

/// Parses "1,1;1,1;0,2" or "(1,1),(1,1),(0,2)": integers are read in order and
/// paired up.
std::vector<Bidegree> parse_bidegrees(const std::string& text);

/// Deterministic random system for cross-checking: N + M <= max_classes,
/// entries in 0..max_entry, never (0,0). Depends only on (seed, case_index).
BidegreeSystem random_system(std::uint64_t seed, std::uint64_t case_index, int max_classes,
                             int max_entry);

}  // namespace dqp::chow
