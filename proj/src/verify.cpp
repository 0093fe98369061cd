#include "dqp/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include <omp.h>

#include "dqp/chow.hpp"
#include "dqp/closure.hpp"
#include "dqp/core.hpp"
#include "dqp/errors.hpp"
#include "dqp/ffcount.hpp"
#include "dqp/le_engine.hpp"

namespace dqp::verify {

using report::Check;

namespace {

// Tallies one named property over many cases and remembers the first failure.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void record(bool ok, const std::string& what) {
    ++cases_;
    if (!ok && failures_++ == 0) first_failure_ = what;
  }

  Check finish() const {
    std::ostringstream detail;
    detail << cases_ << (cases_ == 1 ? " case" : " cases");
    if (failures_ > 0) detail << ", " << failures_ << " failed; first: " << first_failure_;
    return Check{name_, failures_ == 0 && cases_ > 0, detail.str()};
  }

 private:
  std::string name_;
  int cases_ = 0;
  int failures_ = 0;
  std::string first_failure_;
};

std::string params_label(const DqpParams& d) {
  return "(n=" + std::to_string(d.n()) + ",q=" + std::to_string(d.q()) + ",p=" + std::to_string(d.p()) + ")";
}

// Runs `body` for every case index in parallel and reports per-case outcomes
// in index order, so the result is independent of scheduling.
std::vector<std::pair<bool, std::string>> sharded(int cases, int jobs,
                                                  const std::function<std::pair<bool, std::string>(int)>& body) {
  std::vector<std::pair<bool, std::string>> out(static_cast<std::size_t>(cases));
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for num_threads(threads) schedule(dynamic)
  for (int c = 0; c < cases; ++c) {
    try {
      out[static_cast<std::size_t>(c)] = body(c);
    } catch (const std::exception& e) {
      out[static_cast<std::size_t>(c)] = {false, "case " + std::to_string(c) + " threw: " + e.what()};
    }
  }
  return out;
}

std::string describe(const chow::BidegreeSystem& s) {
  std::ostringstream out;
  out << "P^" << s.ambient_n << "xP^" << s.ambient_m << " [";
  for (std::size_t i = 0; i < s.classes.size(); ++i) {
    out << (i ? " " : "") << "(" << s.classes[i].a << "," << s.classes[i].b << ")";
  }
  out << "]";
  return out.str();
}

std::string describe(const closure::Monomial& m) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < m.exponents.size(); ++i) out << (i ? "," : "") << m.exponents[i];
  out << ")";
  return out.str();
}

std::string describe(const closure::MonomialIdeal& ideal) {
  std::string s = "<";
  for (const auto& g : ideal.generators()) s += describe(g);
  return s + ">";
}

closure::Monomial random_monomial(std::mt19937_64& rng, int vars, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  closure::Monomial m{std::vector<int>(static_cast<std::size_t>(vars))};
  for (auto& x : m.exponents) x = e(rng);
  return m;
}

closure::MonomialIdeal random_ideal(std::mt19937_64& rng, int vars, int max_exp, int max_gens) {
  const int gens = std::uniform_int_distribution<int>(1, max_gens)(rng);
  std::vector<closure::Monomial> g;
  for (int k = 0; k < gens; ++k) g.push_back(random_monomial(rng, vars, max_exp));
  return closure::MonomialIdeal(vars, std::move(g));
}

std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t stream, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index)};
  return std::mt19937_64(seq);
}

}  // namespace

std::vector<Check> core_suite(const Options& o) {
  std::vector<Check> checks;
  const int pmax = std::max(o.pmax, 1);

  Tally table("le_table_shape");
  Tally massey("massey_identity");
  Tally lambda0("lambda0_rule");
  Tally shift("le_table_shift_invariance");
  for (int p = 1; p <= pmax; ++p) {
    const int base = symmetric_entry_count(p);
    for (int q = base; q <= base + 3; ++q) {
      for (int n = q + p; n <= q + p + 3; ++n) {
        const DqpParams params = validate_params(n, q, p);
        const LeNumberTable t = le_numbers(params);
        const std::string label = params_label(params);

        bool shape = static_cast<int>(t.entries.size()) == q + 1 && t.fixed_cycles.size() == 2 &&
                     t.fixed_cycles[0].cycle_multiplicity == 1 && t.fixed_cycles[0].dimension == q &&
                     t.fixed_cycles[1].cycle_multiplicity == 2 && t.fixed_cycles[1].dimension == q - 1;
        for (int d = 0; d <= q && shape; ++d) {
          if (q - d <= p) {
            shape = t.at(d) == pow2(q - d) * binomial(p, p - (q - d));
          } else if (p > 1) {
            shape = t.at(d) == 0;
          }
        }
        table.record(shape, label);
        massey.record(verify_massey_identity(params), label);
        if (p > 1) {
          lambda0.record(t.at(0) == 0, label);
        } else if (q == 1) {
          lambda0.record(t.at(0) == 2, label);
        }
        const LeNumberTable shifted = le_numbers(validate_params(n + 1, q + 1, p));
        bool same = shifted.at(0) == 0;
        for (int d = 0; d <= q && same; ++d) same = shifted.at(d + 1) == t.at(d);
        shift.record(same, label);
      }
    }
  }
  checks.push_back(table.finish());
  checks.push_back(massey.finish());
  checks.push_back(lambda0.finish());
  checks.push_back(shift.finish());

  Tally sphere("reduced_euler_characteristic_parity");
  for (int p = 1; p <= pmax; ++p) {
    for (int k = 0; k <= 3; ++k) {
      const int q = symmetric_entry_count(p);
      const DqpParams params = validate_params(q + p + k, q, p);
      // Suspending once per square term flips the sign.
      const int expected = ((k % 2 == 0) ? -1 : 1);
      sphere.record(milnor_sphere_dimension(params) == 2 * p - 1 + k &&
                        reduced_euler_characteristic(params) == expected,
                    params_label(params));
    }
  }
  checks.push_back(sphere.finish());

  const int polar_max = std::max(pmax, 8);
  Tally half("polar_is_half_of_le");
  Tally eu("euler_obstruction_sigma1_parity");
  Tally alternation("euler_obstruction_sigma1_alternation");
  for (int p = 1; p <= polar_max; ++p) {
    const PolarMultiplicityTable polar = polar_multiplicities_sigma1(p);
    const LeNumberTable le = le_numbers(DqpParams::minimal(p));
    bool ok = true;
    for (int d = 0; d <= polar.top_dimension() && ok; ++d) ok = 2 * polar.at(d) == le.at(d);
    half.record(ok, "p=" + std::to_string(p));
    const BigInt sum = polar_alternating_sum(polar);
    eu.record(sum == (p % 2 == 0 ? 0 : 1) && euler_obstruction_sigma1(p) == sum, "p=" + std::to_string(p));
    alternation.record(euler_obstruction_sigma1(p) + euler_obstruction_sigma1(p + 1) == 1,
                       "p=" + std::to_string(p));
  }
  checks.push_back(half.finish());
  checks.push_back(eu.finish());
  checks.push_back(alternation.finish());

  Tally hyper("euler_obstruction_hypersurface");
  for (int p = 2; p <= pmax; ++p) {
    for (int extra_q = 0; extra_q <= 1; ++extra_q) {
      const int q = symmetric_entry_count(p) + extra_q;
      for (int codim = p; codim <= p + 2; ++codim) {
        const DqpParams params = validate_params(q + codim, q, p);
        const int expected = (p % 2 == 0) ? 1 + (codim % 2 == 0 ? 1 : -1) : 1;
        hyper.record(euler_obstruction_hypersurface(params) == expected, params_label(params));
      }
    }
  }
  checks.push_back(hyper.finish());

  Tally reject("euler_obstruction_hypersurface_rejects_p1");
  try {
    euler_obstruction_hypersurface(validate_params(2, 1, 1));
    reject.record(false, "p=1 accepted");
  } catch (const ValidationError&) {
    reject.record(true, "");
  }
  checks.push_back(reject.finish());
  return checks;
}

std::vector<Check> chow_suite(const Options& o) {
  std::vector<Check> checks;
  constexpr std::uint64_t kStream = 0xC0;

  auto outcome = sharded(o.chow_cases, o.jobs, [&](int c) -> std::pair<bool, std::string> {
    const chow::BidegreeSystem s = chow::random_system(o.seed, static_cast<std::uint64_t>(c), 12, 3);
    const BigInt ring = chow::intersection_number_ring(s);
    const BigInt fulton = chow::intersection_number_fulton(s);
    return {ring == fulton, describe(s) + ": ring " + ring.str() + " vs fulton " + fulton.str()};
  });
  Tally agree("chow_ring_vs_fulton");
  for (const auto& [ok, what] : outcome) agree.record(ok, what);
  checks.push_back(agree.finish());

  Tally perm("chow_permutation_invariance");
  Tally multi("chow_multilinearity");
  Tally vanish("chow_degenerate_vanishing");
  const int sample = std::min(o.chow_cases, 100);
  for (int c = 0; c < sample; ++c) {
    const chow::BidegreeSystem s = chow::random_system(o.seed, static_cast<std::uint64_t>(c), 12, 3);
    const BigInt base = chow::intersection_number_ring(s);
    chow::BidegreeSystem shuffled = s;
    auto rng = case_rng(o.seed, kStream, c);
    std::shuffle(shuffled.classes.begin(), shuffled.classes.end(), rng);
    perm.record(chow::intersection_number_ring(shuffled) == base &&
                    chow::intersection_number_fulton(shuffled) == base,
                describe(s));

    const auto split = std::find_if(s.classes.begin(), s.classes.end(),
                                    [](const chow::Bidegree& b) { return b.a > 0 && b.b > 0; });
    if (split != s.classes.end()) {
      const auto at = static_cast<std::size_t>(split - s.classes.begin());
      chow::BidegreeSystem only_h = s;
      chow::BidegreeSystem only_k = s;
      only_h.classes[at] = {split->a, 0};
      only_k.classes[at] = {0, split->b};
      multi.record(chow::intersection_number_fulton(only_h) + chow::intersection_number_fulton(only_k) == base,
                   describe(s));
    }

    const auto no_h = std::count_if(s.classes.begin(), s.classes.end(), [](const chow::Bidegree& b) { return b.a == 0; });
    const auto no_k = std::count_if(s.classes.begin(), s.classes.end(), [](const chow::Bidegree& b) { return b.b == 0; });
    if (no_h > s.ambient_m || no_k > s.ambient_n) vanish.record(base == 0, describe(s));
  }
  checks.push_back(perm.finish());
  checks.push_back(multi.finish());
  checks.push_back(vanish.finish());

  Tally engine("le_engine_vs_closed_form");
  Tally underlying("le_engine_underlying_multiplicity");
  for (int p = 2; p <= std::max(o.pmax, 2); ++p) {
    const LeNumberTable table = le_numbers(DqpParams::minimal(p));
    const PolarMultiplicityTable polar = polar_multiplicities_sigma1(p);
    const int q = symmetric_entry_count(p);
    for (int i = 1; i <= p; ++i) {
      const std::string label = "p=" + std::to_string(p) + ",i=" + std::to_string(i);
      engine.record(le::le_number_via_chow(p, i) == table.at(q - i), label);
      const BigInt u = le::underlying_multiplicity_via_chow(p, i);
      underlying.record(u == pow2(i - 1) * binomial(p, p - i) && u == polar.at(q - i), label);
    }
  }
  checks.push_back(engine.finish());
  checks.push_back(underlying.finish());

  Tally det("det_multiplicity");
  for (int p = 1; p <= std::min(std::max(o.pmax, 1), le::kMaxSymbolicDeterminantSize); ++p) {
    const SymbolicPolynomial d = le::generic_symmetric_det(p);
    det.record(d.is_homogeneous() && d.total_degree() == p && le::det_multiplicity(p) == p,
               "p=" + std::to_string(p));
  }
  checks.push_back(det.finish());
  return checks;
}

std::vector<Check> closure_suite(const Options& o) {
  using namespace closure;
  std::vector<Check> checks;
  constexpr std::uint64_t kStream = 0xC1;

  Tally squares("squares_reduce_square_of_maximal_ideal");
  for (int p = 1; p <= std::max(o.pmax, 1); ++p) {
    squares.record(is_reduction(pure_powers_ideal(p, 2), power_ideal(variables_ideal(p), 2)),
                 "p=" + std::to_string(p));
  }
  checks.push_back(squares.finish());

  Tally classic("closure_known_members");
  {
    const MonomialIdeal cubes = pure_powers_ideal(2, 3);
    classic.record(in_integral_closure_newton(cubes, Monomial{{2, 2}}), "x^2y^2 in (x^3,y^3)");
    const MonomialIdeal squares = pure_powers_ideal(2, 2);
    classic.record(!in_integral_closure_newton(squares, Monomial{{1, 0}}), "y1 not in (y1^2,y2^2)");
    classic.record(in_integral_closure_newton(squares, Monomial{{1, 1}}), "y1y2 in (y1^2,y2^2)");
    classic.record(!is_reduction(MonomialIdeal(2, {Monomial{{2, 0}}}), squares), "(y1^2) does not reduce (y1^2,y2^2)");
  }
  checks.push_back(classic.finish());

  auto duality = sharded(o.closure_cases, o.jobs, [&](int c) -> std::pair<bool, std::string> {
    auto rng = case_rng(o.seed, kStream, c);
    const int vars = std::uniform_int_distribution<int>(1, 4)(rng);
    const MonomialIdeal ideal = random_ideal(rng, vars, 5, 5);
    const Monomial m = random_monomial(rng, vars, 5);
    const bool newton = in_integral_closure_newton(ideal, m);
    const auto normals = newton_facet_normals(ideal);
    const bool valuative = in_integral_closure_valuative(ideal, m, normals);
    const auto defaults = default_witnesses(vars, o.seed + static_cast<std::uint64_t>(c));
    // Fewer witnesses can only accept more, never refute a true member.
    const bool sound = !newton || in_integral_closure_valuative(ideal, m, defaults);
    return {newton == valuative && sound, describe(ideal) + " m=" + describe(m)};
  });
  Tally dual("newton_vs_facet_valuative");
  for (const auto& [ok, what] : duality) dual.record(ok, what);
  checks.push_back(dual.finish());

  Tally mono("closure_monotonicity");
  Tally degree("closure_degree_necessity");
  Tally chain("reduction_transitivity");
  for (int c = 0; c < o.closure_cases; ++c) {
    auto rng = case_rng(o.seed, kStream + 1, c);
    const int vars = std::uniform_int_distribution<int>(1, 3)(rng);
    const MonomialIdeal ideal = random_ideal(rng, vars, 4, 4);
    const Monomial m = random_monomial(rng, vars, 4);
    std::vector<Monomial> bigger = ideal.generators();
    bigger.push_back(random_monomial(rng, vars, 4));
    const MonomialIdeal larger(vars, bigger);
    const bool member = in_integral_closure_newton(ideal, m);
    if (member) {
      mono.record(in_integral_closure_newton(larger, m), describe(ideal) + " m=" + describe(m));
      degree.record(m.total_degree() >= ideal.min_generator_degree(), describe(ideal) + " m=" + describe(m));
    }

    // J ⊆ I ⊆ K built by dropping generators of a random K.
    const MonomialIdeal k_ideal = random_ideal(rng, vars, 4, 5);
    std::vector<Monomial> i_gens;
    std::vector<Monomial> j_gens;
    for (const auto& g : k_ideal.generators()) {
      if (rng() % 4 != 0) {
        i_gens.push_back(g);
        if (rng() % 3 != 0) j_gens.push_back(g);
      }
    }
    if (j_gens.empty()) continue;
    const MonomialIdeal i_ideal(vars, i_gens);
    const MonomialIdeal j_ideal(vars, j_gens);
    if (is_reduction(j_ideal, i_ideal) && is_reduction(i_ideal, k_ideal)) {
      chain.record(is_reduction(j_ideal, k_ideal), describe(j_ideal) + " " + describe(k_ideal));
    }
  }
  // The fixed family J ⊆ J + (y1 y2) ⊆ I^2 always exercises the implication.
  for (int p = 2; p <= std::max(o.pmax, 2); ++p) {
    const MonomialIdeal j_ideal = pure_powers_ideal(p, 2);
    std::vector<Monomial> mid = j_ideal.generators();
    Monomial y1y2{std::vector<int>(static_cast<std::size_t>(p), 0)};
    y1y2.exponents[0] = y1y2.exponents[1] = 1;
    mid.push_back(y1y2);
    const MonomialIdeal i_ideal(p, mid);
    const MonomialIdeal k_ideal = power_ideal(variables_ideal(p), 2);
    chain.record(is_reduction(j_ideal, i_ideal) && is_reduction(i_ideal, k_ideal) && is_reduction(j_ideal, k_ideal),
                 "p=" + std::to_string(p));
  }
  checks.push_back(mono.finish());
  checks.push_back(degree.finish());
  checks.push_back(chain.finish());

  Tally count("reduction_generator_count");
  for (int p = 1; p <= std::max(o.pmax, 1); ++p) {
    const auto r = reduction_generator_count(p);
    count.record(r.generators == 2 * p && r.fiber_dimension_bound == 2 * p - 1, "p=" + std::to_string(p));
  }
  checks.push_back(count.finish());
  return checks;
}

std::vector<Check> ffcount_suite(const Options& o) {
  using namespace ffcount;
  std::vector<Check> checks;
  const std::vector<std::uint64_t> primes{3, 5, 7, 11};

  Tally agree("count_matches_prediction");
  Tally reference("parallel_kernel_matches_serial_reference");
  Tally targets("count_independent_of_target");
  Tally jobs("count_independent_of_jobs");
  for (int p = 1; p <= 3; ++p) {
    for (int q1 = 0; q1 <= 2; ++q1) {
      const NormalFormSpec spec(p, q1);
      for (std::uint64_t prime : primes) {
        const std::uint64_t total = total_points(spec, prime);
        if (total > o.count_budget) continue;
        const std::string label = "p=" + std::to_string(p) + ",q1=" + std::to_string(q1) +
                                  ",F_" + std::to_string(prime);
        const auto r = count_points(spec, prime, 1, o.count_budget, o.jobs);
        agree.record(r.agrees(), label + ": observed " + std::to_string(r.observed_count) +
                                     " predicted " + r.predicted_count.str());
        if (total <= 100'000) {
          reference.record(kernels::count_serial(spec, prime, 1) == r.observed_count, label);
        }
        if (prime <= 7 && total <= 100'000) {
          bool same = true;
          for (std::uint64_t t = 2; t < prime && same; ++t) {
            same = count_points(spec, prime, t, o.count_budget, o.jobs).observed_count == r.observed_count;
          }
          targets.record(same, label);
        }
        if (total <= 200'000) {
          bool same = true;
          for (int j : {1, 2, 8}) same = same && kernels::count_parallel(spec, prime, 1, j) == r.observed_count;
          jobs.record(same, label);
        }
      }
    }
  }
  checks.push_back(agree.finish());
  checks.push_back(reference.finish());
  checks.push_back(targets.finish());
  checks.push_back(jobs.finish());

  Tally partition("count_independent_of_partition");
  for (int c = 0; c < 20; ++c) {
    auto rng = case_rng(o.seed, 0xF0, c);
    const NormalFormSpec spec(1 + static_cast<int>(rng() % 2), static_cast<int>(rng() % 2));
    const std::uint64_t prime = primes[rng() % 3];
    const std::uint64_t total = total_points(spec, prime);
    std::vector<std::uint64_t> cuts{0, total};
    for (int k = 0; k < 5; ++k) cuts.push_back(rng() % (total + 1));
    std::sort(cuts.begin(), cuts.end());
    std::uint64_t sum = 0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) sum += kernels::count_range(spec, prime, 1, cuts[k], cuts[k + 1]);
    partition.record(sum == kernels::count_range(spec, prime, 1, 0, total), "case " + std::to_string(c));
  }
  checks.push_back(partition.finish());

  Tally interp("counting_polynomial_interpolation");
  Tally chi("counting_polynomial_euler_characteristic");
  for (const auto& [p, q1] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 0}, {2, 1}, {3, 0}}) {
    const NormalFormSpec spec(p, q1);
    const std::string label = "p=" + std::to_string(p) + ",q1=" + std::to_string(q1);
    std::vector<std::pair<BigInt, BigInt>> samples;
    bool observed_ok = true;
    for (std::uint64_t prime : odd_primes(static_cast<std::size_t>(spec.n()) + 1)) {
      BigInt value;
      if (total_points(spec, prime) <= o.count_budget) {
        value = count_points(spec, prime, 1, o.count_budget, o.jobs).observed_count;
        observed_ok = observed_ok && value == predicted_count(spec, prime);
      } else {
        value = predicted_count(spec, prime);
      }
      samples.emplace_back(prime, value);
    }
    const IntPolynomial fitted = interpolate(samples);
    const IntPolynomial closed = counting_polynomial(spec);
    interp.record(observed_ok && fitted == closed && fitted.degree() == spec.n() - 1 && fitted(1) == 0,
                  label + ": " + fitted.to_string());
    const int q = symmetric_entry_count(p) + q1;
    const DqpParams params = validate_params(q + p, q, p);
    // chi(M) = N(1); the reduced characteristic subtracts the point.
    chi.record(closed(1) - 1 == reduced_euler_characteristic(params), label);
  }
  checks.push_back(interp.finish());
  checks.push_back(chi.finish());
  return checks;
}

std::vector<Check> run(const std::string& scope, const Options& options) {
  if (scope != "all" && scope != "core" && scope != "chow" && scope != "closure" && scope != "ffcount") {
    throw ValidationError("scope must be one of all, core, chow, closure, ffcount (got " + scope + ")");
  }
  std::vector<Check> checks;
  auto append = [&](std::vector<Check> more) { checks.insert(checks.end(), more.begin(), more.end()); };
  if (scope == "all" || scope == "core") append(core_suite(options));
  if (scope == "all" || scope == "chow") append(chow_suite(options));
  if (scope == "all" || scope == "closure") append(closure_suite(options));
  if (scope == "all" || scope == "ffcount") append(ffcount_suite(options));
  return checks;
}

}  // namespace dqp::verify
