// Acceptance suite: one line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dqp/chow.hpp"
#include "dqp/closure.hpp"
#include "dqp/commands.hpp"
#include "dqp/core.hpp"
#include "dqp/ffcount.hpp"
#include "dqp/le_engine.hpp"
#include "dqp/univariate.hpp"

namespace {

using namespace dqp;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> body;
};

std::string Str(const BigInt& v) { return to_string(v); }

Outcome LeTables() {
  Outcome o;
  const auto a = le_numbers(validate_params(5, 3, 2));
  const std::vector<BigInt> want_a{0, 4, 4, 1};
  o.require(a.entries == want_a, "(5,3,2) table mismatch");
  const auto b = le_numbers(validate_params(9, 6, 3));
  const std::vector<BigInt> want_b{0, 0, 0, 8, 12, 6, 1};
  o.require(b.entries == want_b, "(9,6,3) table mismatch");
  return o;
}

Outcome EngineVsClosedForm() {
  Outcome o;
  int cases = 0;
  for (int p = 2; p <= 6; ++p) {
    for (int i = 1; i <= p; ++i) {
      const BigInt closed = pow2(i) * binomial(p, p - i);
      const BigInt engine = le::le_number_via_chow(p, i);
      o.require(engine == closed, "p=" + std::to_string(p) + " i=" + std::to_string(i) + ": " + Str(engine) +
                                      " vs " + Str(closed));
      ++cases;
    }
  }
  o.require(cases == 20, "expected 20 cases");
  o.detail = o.ok ? std::to_string(cases) + " cases" : o.detail;
  return o;
}

Outcome Massey() {
  Outcome o;
  int cases = 0;
  for (int p = 1; p <= 6; ++p) {
    const int qmin = symmetric_entry_count(p);
    for (int q = qmin; q <= qmin + 3; ++q) {
      for (int n = q + p; n <= q + p + 3; ++n) {
        o.require(verify_massey_identity(validate_params(n, q, p)),
                  "(" + std::to_string(n) + "," + std::to_string(q) + "," + std::to_string(p) + ")");
        ++cases;
      }
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome ChowOracles() {
  Outcome o;
  for (std::uint64_t c = 0; c < 500; ++c) {
    const auto s = chow::random_system(42, c, 12, 3);
    o.require(chow::intersection_number_ring(s) == chow::intersection_number_fulton(s),
              "case " + std::to_string(c));
  }
  if (o.ok) o.detail = "500 systems";
  return o;
}

Outcome EulerObstructions() {
  Outcome o;
  std::vector<int> sigma1;
  for (int p = 2; p <= 8; ++p) sigma1.push_back(euler_obstruction_sigma1(p));
  o.require(sigma1 == std::vector<int>{0, 1, 0, 1, 0, 1, 0}, "sigma1 sequence");
  for (int p = 2; p <= 6; ++p) {
    const int q = symmetric_entry_count(p);
    for (int c = p; c <= p + 2; ++c) {
      const int got = euler_obstruction_hypersurface(validate_params(q + c, q, p));
      const int want = p % 2 == 0 ? 1 + (c % 2 == 0 ? 1 : -1) : 1;
      o.require(got == want, "p=" + std::to_string(p) + " n-q=" + std::to_string(c));
    }
  }
  return o;
}

Outcome Polar() {
  Outcome o;
  const auto p2 = polar_multiplicities_sigma1(2);
  o.require(p2.at(2) == 2 && p2.at(1) == 2 && p2.at(0) == 0, "p=2 table");
  const auto p3 = polar_multiplicities_sigma1(3);
  o.require(p3.at(5) == 3 && p3.at(4) == 6 && p3.at(3) == 4, "p=3 table");
  for (int d = 0; d < 3; ++d) o.require(p3.at(d) == 0, "p=3 low entries");
  for (int p = 2; p <= 6; ++p) {
    const auto polar = polar_multiplicities_sigma1(p);
    const auto le = le_numbers(DqpParams::minimal(p));
    for (int d = 0; d < symmetric_entry_count(p); ++d) {
      o.require(2 * polar.at(d) == le.at(d), "half of Le number, p=" + std::to_string(p));
    }
  }
  return o;
}

Outcome IntegralClosure() {
  using namespace dqp::closure;
  Outcome o;
  for (int p = 1; p <= 6; ++p) {
    o.require(is_reduction(pure_powers_ideal(p, 2), power_ideal(variables_ideal(p), 2)),
              "squares, p=" + std::to_string(p));
  }
  o.require(in_integral_closure_newton(pure_powers_ideal(2, 3), Monomial{{2, 2}}), "x^2y^2");
  o.require(!in_integral_closure_newton(pure_powers_ideal(2, 2), Monomial{{1, 0}}), "y1");
  std::mt19937_64 rng(42);
  int agree = 0;
  for (int c = 0; c < 200; ++c) {
    const int vars = 1 + c % 4;
    std::uniform_int_distribution<int> exp(0, 4);
    std::uniform_int_distribution<int> count(1, 4);
    std::vector<Monomial> gens;
    const int k = count(rng);
    for (int g = 0; g < k; ++g) {
      Monomial m{std::vector<int>(static_cast<std::size_t>(vars))};
      for (auto& e : m.exponents) e = exp(rng);
      gens.push_back(m);
    }
    const MonomialIdeal ideal(vars, gens);
    Monomial m{std::vector<int>(static_cast<std::size_t>(vars))};
    for (auto& e : m.exponents) e = exp(rng) + 1;
    const auto normals = newton_facet_normals(ideal);
    agree += in_integral_closure_newton(ideal, m) == in_integral_closure_valuative(ideal, m, normals);
  }
  o.require(agree == 200, std::to_string(200 - agree) + " duality disagreements");
  return o;
}

Outcome FiniteFieldCounts() {
  using namespace dqp::ffcount;
  Outcome o;
  for (std::uint64_t prime : {3u, 5u, 7u, 11u}) {
    const auto r = count_points(NormalFormSpec(1, 0), prime);
    o.require(r.observed_count == prime - 1 && r.agrees(), "p=1 over F_" + std::to_string(prime));
  }
  o.require(count_points(NormalFormSpec(2, 0), 3).observed_count == 72, "p=2 over F_3");
  o.require(count_points(NormalFormSpec(2, 0), 5).observed_count == 600, "p=2 over F_5");
  o.require(count_points(NormalFormSpec(2, 1), 3).observed_count == 216, "p=2, q1=1 over F_3");
  for (const NormalFormSpec& spec : {NormalFormSpec(1, 0), NormalFormSpec(2, 0), NormalFormSpec(2, 1)}) {
    std::vector<std::pair<BigInt, BigInt>> samples;
    for (std::uint64_t prime : odd_primes(static_cast<std::size_t>(spec.n()))) {
      samples.emplace_back(BigInt(prime), BigInt(count_points(spec, prime).observed_count));
    }
    const IntPolynomial fitted = interpolate(samples);
    o.require(fitted == counting_polynomial(spec), "interpolated " + fitted.to_string());
    // Vanishing at t = 1 is reduced Euler characteristic -1 for k = 0.
    o.require(fitted(1) == 0, "N(1) != 0");
  }
  return o;
}

Outcome DetMultiplicity() {
  Outcome o;
  for (int p = 1; p <= 6; ++p) {
    o.require(le::det_multiplicity(p) == p, "p=" + std::to_string(p));
  }
  return o;
}

Outcome Determinism() {
  Outcome o;
  auto run = [](const std::vector<std::string>& args, int& code) {
    std::ostringstream out;
    std::ostringstream err;
    code = cli::run(args, out, err);
    return out.str();
  };
  int code_a = 0;
  int code_b = 0;
  const std::vector<std::string> verify{"verify", "--seed", "42", "--format", "json"};
  const std::string a = run(verify, code_a);
  const std::string b = run(verify, code_b);
  o.require(code_a == 0 && code_b == 0, "verify reported failures");
  o.require(!a.empty() && a == b, "verify output differs between runs");
  std::map<int, std::string> counts;
  for (int jobs : {1, 2, 8}) {
    int code = 0;
    const std::string out = run({"count", "--p", "2", "--q1", "1", "--prime", "5", "--jobs", std::to_string(jobs),
                           "--format", "csv"},
                          code);
    o.require(code == 0, "count failed");
    counts[jobs] = out;
  }
  o.require(counts[1] == counts[2] && counts[2] == counts[8], "count depends on --jobs");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Le-number tables", 1.0, LeTables},
      {2, "engine vs closed form", 5.0, EngineVsClosedForm},
      {3, "Massey identity", 5.0, Massey},
      {4, "Chow oracle equivalence", 10.0, ChowOracles},
      {5, "Euler obstructions", 1.0, EulerObstructions},
      {6, "polar multiplicities", 1.0, Polar},
      {7, "integral closure", 10.0, IntegralClosure},
      {8, "finite-field counts", 30.0, FiniteFieldCounts},
      {9, "determinant multiplicity", 5.0, DetMultiplicity},
      {10, "determinism", 120.0, Determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (o.ok && seconds >= c.limit_seconds) {
      o.ok = false;
      o.detail = "over time limit";
    }
    failures += !o.ok;
    std::printf("%s criterion %2d: %-26s %8.3f s (limit %g s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, seconds,
                c.limit_seconds, o.detail.empty() ? "" : "  ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
