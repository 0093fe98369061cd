#include "dqp/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "dqp/closure.hpp"
#include "dqp/errors.hpp"
#include "dqp/ideal_parse.hpp"
#include "dqp/le_engine.hpp"

namespace dqp::cli {

using report::Check;
using report::num;
using report::Report;
using report::Table;
using report::Value;
using report::text;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
auto timed(Report& r, const std::string& section, F&& body) {
  const auto start = Clock::now();
  auto result = body();
  r.elapsed.emplace_back(section, std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start));
  return result;
}

std::string monomial_text(const closure::Monomial& m, char letter) {
  std::string out;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += letter + std::to_string(i + 1);
    if (m.exponents[i] > 1) out += "^" + std::to_string(m.exponents[i]);
  }
  return out.empty() ? "1" : out;
}

std::string weight_text(const closure::WeightVector& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.weights().size(); ++i) out += (i ? "," : "") + to_string(w.weights()[i]);
  return out + ")";
}

Rational parse_rational(const std::string& token) {
  const auto slash = token.find('/');
  auto integer = [&](const std::string& s) -> BigInt {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18) {
      throw ValidationError("malformed weight entry \"" + token + "\"");
    }
    return BigInt(s);
  };
  if (slash == std::string::npos) return Rational(integer(token));
  const BigInt den = integer(token.substr(slash + 1));
  if (den == 0) throw ValidationError("zero denominator in weight entry \"" + token + "\"");
  return Rational(integer(token.substr(0, slash)), den);
}

std::vector<closure::WeightVector> parse_witnesses(const std::string& spec, int vars) {
  std::vector<closure::WeightVector> out;
  std::stringstream vectors(spec);
  std::string vec;
  while (std::getline(vectors, vec, ';')) {
    std::string cleaned;
    for (char c : vec) {
      if (c != ' ' && c != '(' && c != ')') cleaned += c;
    }
    if (cleaned.empty()) continue;
    std::vector<Rational> weights;
    std::stringstream entries(cleaned);
    std::string entry;
    while (std::getline(entries, entry, ',')) weights.push_back(parse_rational(entry));
    if (static_cast<int>(weights.size()) != vars) {
      throw ValidationError("weight vector \"" + vec + "\" has " + std::to_string(weights.size()) +
                            " entries, expected " + std::to_string(vars));
    }
    out.emplace_back(std::move(weights));
  }
  if (out.empty()) throw ValidationError("no weight vectors given");
  return out;
}

}  // namespace

Report cmd_invariants(const DqpParams& params) {
  Report r;
  r.command = "invariants";
  r.inputs = {{"n", num(params.n())}, {"q", num(params.q())}, {"p", num(params.p())}};
  r.summary = {{"k", num(params.k())},
               {"q1", num(params.q1())},
               {"milnor_sphere_dimension", num(milnor_sphere_dimension(params))},
               {"reduced_euler_characteristic", num(reduced_euler_characteristic(params))}};

  const LeNumberTable le = timed(r, "le_numbers", [&] { return le_numbers(params); });
  Table le_table{"le_numbers", {"dimension", "lambda"}, {}};
  for (int d = params.q(); d >= 0; --d) le_table.rows.push_back({num(d), num(le.at(d))});
  Table cycles{"fixed_cycles", {"name", "dimension", "cycle_multiplicity"}, {}};
  for (const FixedCycle& c : le.fixed_cycles) {
    cycles.rows.push_back({text(c.name), num(c.dimension), num(c.cycle_multiplicity)});
  }

  const PolarMultiplicityTable polar =
      timed(r, "polar_multiplicities", [&] { return polar_multiplicities_sigma1(params.p()); });
  Table polar_table{"polar_multiplicities_sigma1", {"dimension", "multiplicity"}, {}};
  for (int d = polar.top_dimension(); d >= 0; --d) polar_table.rows.push_back({num(d), num(polar.at(d))});

  r.summary.emplace_back("euler_obstruction_sigma1", num(euler_obstruction_sigma1(params.p())));
  if (params.p() > 1) {
    r.summary.emplace_back("euler_obstruction_hypersurface", num(euler_obstruction_hypersurface(params)));
  } else {
    r.notes.push_back(
        "euler_obstruction_hypersurface omitted: the fixed-cycle formula is established only for p > 1");
  }
  r.tables = {std::move(le_table), std::move(cycles), std::move(polar_table)};

  const BigInt massey = massey_alternating_sum(le);
  r.checks.push_back({"massey_identity", massey == reduced_euler_characteristic(params),
                      "alternating Lê sum " + massey.str() + ", reduced Euler characteristic " +
                          std::to_string(reduced_euler_characteristic(params))});
  const LeNumberTable minimal = le_numbers(DqpParams::minimal(params.p()));
  bool half = true;
  for (int d = 0; d <= polar.top_dimension(); ++d) half = half && 2 * polar.at(d) == minimal.at(d);
  r.checks.push_back({"polar_is_half_of_le", half, "minimal germ of matrix size " + std::to_string(params.p())});
  return r;
}

Report cmd_lecycles(int p, std::optional<int> i) {
  Report r;
  r.command = "lecycles";
  r.inputs = {{"p", num(p)}};
  if (i) r.inputs.emplace_back("i", num(*i));
  const int first = i.value_or(1);
  const int last = i.value_or(p);
  // Validates p and i before any output is built.
  le::build_le_system(p, first);
  le::build_le_system(p, last);

  const int q = symmetric_entry_count(p);
  Table rows{"le_cycles",
             {"i", "dimension", "ambient_n", "ambient_m", "matrix_equations", "quadrics", "hyperplanes",
              "ring", "fulton", "le_number", "closed_form"},
             {}};
  for (int k = first; k <= last; ++k) {
    const le::LeSystemSpec spec = le::build_le_system(p, k);
    const BigInt ring = timed(r, "ring_i" + std::to_string(k), [&] { return chow::intersection_number_ring(spec.system); });
    const int total = spec.system.ambient_n + spec.system.ambient_m;
    report::Value fulton_value = text("skipped");
    if (total <= chow::kFultonMaxClasses) {
      const BigInt fulton =
          timed(r, "fulton_i" + std::to_string(k), [&] { return chow::intersection_number_fulton(spec.system); });
      fulton_value = num(fulton);
      r.checks.push_back({"ring_vs_fulton_i" + std::to_string(k), fulton == ring,
                          "ring " + ring.str() + ", fulton " + fulton.str()});
    }
    const BigInt le_number = 2 * ring;
    const BigInt closed = pow2(k) * binomial(p, p - k);
    r.checks.push_back({"engine_vs_closed_form_i" + std::to_string(k), le_number == closed,
                        "engine " + le_number.str() + ", closed form " + closed.str()});
    rows.rows.push_back({num(k), num(q - k), num(spec.system.ambient_n), num(spec.system.ambient_m),
                         num(spec.matrix_equations), num(spec.quadrics), num(spec.hyperplanes), num(ring),
                         fulton_value, num(le_number), num(closed)});
  }
  r.tables.push_back(std::move(rows));
  if (p <= le::kMaxSymbolicDeterminantSize) {
    const int mult = timed(r, "det_multiplicity", [&] { return le::det_multiplicity(p); });
    r.summary.emplace_back("det_multiplicity", num(mult));
    r.checks.push_back({"det_multiplicity_equals_p", mult == p, "order of det X at 0 is " + std::to_string(mult)});
  }
  return r;
}

Report cmd_chow(const chow::BidegreeSystem& system, const std::string& algorithm) {
  if (algorithm != "ring" && algorithm != "fulton" && algorithm != "both") {
    throw ValidationError("algorithm must be one of ring, fulton, both (got " + algorithm + ")");
  }
  chow::validate(system);
  Report r;
  r.command = "chow";
  std::string classes;
  for (const auto& c : system.classes) {
    classes += (classes.empty() ? "" : ";") + std::to_string(c.a) + "," + std::to_string(c.b);
  }
  r.inputs = {{"n", num(system.ambient_n)}, {"m", num(system.ambient_m)},
              {"bidegrees", text(classes)}, {"algorithm", text(algorithm)}};
  std::optional<BigInt> ring;
  std::optional<BigInt> fulton;
  if (algorithm != "fulton") {
    ring = timed(r, "ring", [&] { return chow::intersection_number_ring(system); });
    r.summary.emplace_back("ring", num(*ring));
  }
  if (algorithm != "ring") {
    fulton = timed(r, "fulton", [&] { return chow::intersection_number_fulton(system); });
    r.summary.emplace_back("fulton", num(*fulton));
  }
  r.summary.emplace_back("intersection_number", num(ring ? *ring : *fulton));
  if (ring && fulton) {
    r.checks.push_back({"ring_vs_fulton", *ring == *fulton, "ring " + ring->str() + ", fulton " + fulton->str()});
  }
  return r;
}

Report cmd_closure(const ClosureRequest& request) {
  using namespace closure;
  if (request.mode != "newton" && request.mode != "valuative" && request.mode != "both") {
    throw ValidationError("mode must be one of newton, valuative, both (got " + request.mode + ")");
  }
  if (request.monomial.has_value() == request.reduction_of.has_value()) {
    throw ValidationError("give exactly one of --monomial or --reduction-of");
  }
  const ParsedMonomials ideal_text = parse_monomials(request.ideal);
  const ParsedMonomials other_text = parse_monomials(request.monomial ? *request.monomial : *request.reduction_of);
  const char letter = common_letter({&ideal_text, &other_text});
  int vars = std::max({ideal_text.max_index, other_text.max_index, 1});
  if (request.variables) {
    if (*request.variables < vars) {
      throw ValidationError("--vars " + std::to_string(*request.variables) + " is smaller than the largest index " +
                            std::to_string(vars));
    }
    vars = *request.variables;
  }
  const MonomialIdeal ideal = to_ideal(ideal_text, vars);

  Report r;
  r.command = "closure";
  r.inputs = {{"ideal", text(request.ideal)}};
  if (request.monomial) r.inputs.emplace_back("monomial", text(*request.monomial));
  if (request.reduction_of) r.inputs.emplace_back("reduction_of", text(*request.reduction_of));
  r.inputs.emplace_back("mode", text(request.mode));
  r.inputs.emplace_back("variables", num(vars));
  r.inputs.emplace_back("seed", num(BigInt(request.seed)));

  Table gens{"ideal_generators", {"index", "generator"}, {}};
  for (std::size_t k = 0; k < ideal.generators().size(); ++k) {
    gens.rows.push_back({num(static_cast<long long>(k + 1)), text(monomial_text(ideal.generators()[k], letter))});
  }
  r.tables.push_back(std::move(gens));

  if (request.reduction_of) {
    if (other_text.monomials.empty()) throw ValidationError("empty ideal");
    const MonomialIdeal full = to_ideal(other_text, vars);
    const bool contained = ideal.is_subset_of(full);
    Table members{"full_generators", {"generator", "integral_over_sub"}, {}};
    bool all = true;
    for (const Monomial& g : full.generators()) {
      const bool in = in_integral_closure_newton(ideal, g);
      all = all && in;
      members.rows.push_back({text(monomial_text(g, letter)), Value(in)});
    }
    const bool reduction = timed(r, "reduction", [&] { return is_reduction(ideal, full); });
    r.summary = {{"sub_contained_in_full", Value(contained)}, {"is_reduction", Value(reduction)}};
    r.tables.push_back(std::move(members));
    r.checks.push_back({"reduction_consistent", reduction == (contained && all),
                        "containment and per-generator integrality agree with the combined test"});
    return r;
  }

  if (other_text.monomials.size() != 1) throw ValidationError("--monomial must be a single monomial");
  const Monomial m = to_monomial(other_text.monomials.front(), vars);
  r.summary.emplace_back("total_degree", num(m.total_degree()));
  r.summary.emplace_back("in_ideal", Value(ideal.contains(m)));

  std::optional<bool> newton;
  if (request.mode != "valuative") {
    const auto certificate = timed(r, "newton", [&] { return newton_certificate(ideal, m); });
    newton = certificate.has_value();
    r.summary.emplace_back("newton_member", Value(*newton));
    if (certificate) {
      Table weights{"newton_certificate", {"generator", "mu"}, {}};
      for (std::size_t k = 0; k < certificate->size(); ++k) {
        weights.rows.push_back({text(monomial_text(ideal.generators()[k], letter)), Value((*certificate)[k])});
      }
      r.tables.push_back(std::move(weights));
    }
  }
  if (request.mode != "newton") {
    std::vector<WeightVector> witnesses = request.witnesses ? parse_witnesses(*request.witnesses, vars)
                                                            : default_witnesses(vars, request.seed);
    const bool exact = !request.witnesses && vars <= kMaxFacetEnumerationVariables;
    if (exact) {
      auto facets = newton_facet_normals(ideal);
      witnesses.insert(witnesses.end(), facets.begin(), facets.end());
    }
    const auto refutation = timed(r, "valuative", [&] { return valuative_refutation(ideal, m, witnesses); });
    const bool valuative = !refutation.has_value();
    r.summary.emplace_back("valuative_member", Value(valuative));
    r.summary.emplace_back("witness_count", num(static_cast<long long>(witnesses.size())));
    r.summary.emplace_back("witnesses_include_facet_normals", Value(exact));
    if (refutation) r.summary.emplace_back("refuting_weight", text(weight_text(*refutation)));
    if (newton) {
      // A finite witness list can only miss refutations, never invent them.
      const bool consistent = exact ? *newton == valuative : (!*newton || valuative);
      r.checks.push_back({"newton_vs_valuative", consistent,
                          std::string("newton ") + (*newton ? "member" : "non-member") + ", valuative " +
                              (valuative ? "member" : "non-member") +
                              (exact ? " (facet normals included)" : " (finite witness list)")});
    }
  }
  return r;
}

Report cmd_count(const ffcount::NormalFormSpec& spec, std::uint64_t prime, std::uint64_t target, std::uint64_t budget,
                 int jobs) {
  Report r;
  r.command = "count";
  r.inputs = {{"p", num(spec.p())},
              {"q1", num(spec.q1())},
              {"prime", num(BigInt(prime))},
              {"target", num(BigInt(target))},
              {"budget", num(BigInt(budget))}};
  const ffcount::PointCountReport counted = ffcount::count_points(spec, prime, target, budget, jobs);
  r.elapsed.emplace_back("enumeration", counted.elapsed);
  const IntPolynomial poly = ffcount::counting_polynomial(spec);
  r.summary = {{"n", num(spec.n())},
               {"enumerated", num(BigInt(counted.enumerated))},
               {"observed_count", num(BigInt(counted.observed_count))},
               {"predicted_count", num(counted.predicted_count)},
               {"agrees", Value(counted.agrees())},
               {"counting_polynomial", text(poly.to_string())},
               {"counting_polynomial_at_1", num(poly(1))}};
  r.checks.push_back({"observed_equals_predicted", counted.agrees(),
                      "observed " + std::to_string(counted.observed_count) + ", predicted " +
                          counted.predicted_count.str()});
  r.checks.push_back({"counting_polynomial_at_prime", poly(BigInt(prime)) == counted.predicted_count,
                      "N(" + std::to_string(prime) + ") = " + poly(BigInt(prime)).str()});
  return r;
}

Report cmd_verify(const std::string& scope, const verify::Options& options) {
  Report r;
  r.command = "verify";
  r.inputs = {{"scope", text(scope)}, {"pmax", num(options.pmax)}, {"seed", num(BigInt(options.seed))}};
  r.checks = timed(r, "suites", [&] { return verify::run(scope, options); });
  long long passed = 0;
  for (const Check& c : r.checks) passed += c.passed ? 1 : 0;
  r.summary = {{"checks", num(static_cast<long long>(r.checks.size()))},
               {"passed", num(passed)},
               {"failed", num(static_cast<long long>(r.checks.size()) - passed)}};
  return r;
}

std::uint64_t budget_from_environment() {
  const char* raw = std::getenv("DQP_BUDGET");
  if (raw == nullptr || *raw == '\0') return ffcount::kDefaultBudget;
  const std::string value(raw);
  if (value.find_first_not_of("0123456789") != std::string::npos || value.size() > 19) {
    throw ValidationError("DQP_BUDGET must be a nonnegative integer (got \"" + value + "\")");
  }
  return std::stoull(value);
}

namespace {

struct OutputOptions {
  std::string format = "table";
  std::string out_file;
  bool timings = false;
};

void add_output_options(CLI::App* sub, OutputOptions& o) {
  sub->add_option("--format", o.format, "table, json or csv")->capture_default_str();
  sub->add_option("--out", o.out_file, "write the report to FILE instead of stdout");
  sub->add_flag("--timings", o.timings, "include elapsed time per section");
}

int emit(const Report& r, const OutputOptions& o, std::ostream& out, std::ostream& err) {
  const std::string rendered = report::render(r, report::parse_format(o.format), o.timings);
  if (o.out_file.empty()) {
    out << rendered;
  } else {
    std::ofstream file(o.out_file, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << o.out_file << " for writing\n";
      return kCheckFailed;
    }
    file << rendered;
  }
  for (const Check& c : r.checks) {
    if (!c.passed) err << "check failed: " << c.name << ": " << c.detail << '\n';
  }
  return r.all_passed() ? kSuccess : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Milnor fiber, Le cycle, polar and closure computations for D(q,p) germs", "dqp"};
  app.require_subcommand(1);
  OutputOptions output;
  std::function<Report()> action;

  long long n = 0, q = 0, p = 0;
  auto* invariants = app.add_subcommand("invariants", "Milnor fiber, Lê numbers, polar multiplicities, Euler obstructions");
  invariants->add_option("--n", n, "ambient dimension")->required();
  invariants->add_option("--q", q, "dimension of the singular locus")->required();
  invariants->add_option("--p", p, "size of the symmetric matrix")->required();
  add_output_options(invariants, output);
  invariants->callback([&] { action = [&] { return cmd_invariants(validate_params(n, q, p)); }; });

  int le_p = 0;
  std::optional<int> le_i;
  auto* lecycles = app.add_subcommand("lecycles", "Bidegree systems of the Lê cycles and their intersection numbers");
  lecycles->add_option("--p", le_p, "matrix size (>= 2)")->required();
  lecycles->add_option("--i", le_i, "single cycle index 1..p");
  add_output_options(lecycles, output);
  lecycles->callback([&] { action = [&] { return cmd_lecycles(le_p, le_i); }; });

  chow::BidegreeSystem system;
  std::string bidegrees;
  std::string algorithm = "both";
  auto* chow_cmd = app.add_subcommand("chow", "Intersection number of hypersurface classes on P^n x P^m");
  chow_cmd->add_option("--n", system.ambient_n, "dimension of the first factor")->required();
  chow_cmd->add_option("--m", system.ambient_m, "dimension of the second factor")->required();
  chow_cmd->add_option("--bidegrees", bidegrees, "e.g. \"1,1;1,1;0,2\"")->required();
  chow_cmd->add_option("--algorithm", algorithm, "ring, fulton or both")->capture_default_str();
  add_output_options(chow_cmd, output);
  chow_cmd->callback([&] {
    action = [&] {
      system.classes = chow::parse_bidegrees(bidegrees);
      return cmd_chow(system, algorithm);
    };
  });

  ClosureRequest closure_request;
  auto* closure_cmd = app.add_subcommand("closure", "Integral closure and reductions of monomial ideals");
  closure_cmd->add_option("--ideal", closure_request.ideal, "e.g. \"y1^2,y2^2\"")->required();
  closure_cmd->add_option("--monomial", closure_request.monomial, "e.g. \"y1*y2\"");
  closure_cmd->add_option("--reduction-of", closure_request.reduction_of, "test whether --ideal reduces this ideal");
  closure_cmd->add_option("--mode", closure_request.mode, "newton, valuative or both")->capture_default_str();
  closure_cmd->add_option("--witnesses", closure_request.witnesses, "weight vectors, e.g. \"1,0;0,1;2,1\"");
  closure_cmd->add_option("--vars", closure_request.variables, "number of variables");
  closure_cmd->add_option("--seed", closure_request.seed, "seed for random witnesses")->capture_default_str();
  add_output_options(closure_cmd, output);
  closure_cmd->callback([&] { action = [&] { return cmd_closure(closure_request); }; });

  int count_p = 0, count_q1 = 0, jobs = 0;
  std::uint64_t prime = 0, target = 1;
  std::optional<std::uint64_t> budget;
  auto* count_cmd = app.add_subcommand("count", "Exhaustive point count of {f = target} over F_prime");
  count_cmd->add_option("--p", count_p, "matrix size")->required();
  count_cmd->add_option("--q1", count_q1, "inert coordinates")->capture_default_str();
  count_cmd->add_option("--prime", prime, "odd prime")->required();
  count_cmd->add_option("--target", target, "nonzero residue")->capture_default_str();
  count_cmd->add_option("--budget", budget, "maximum number of points (default: DQP_BUDGET or 1e8)");
  count_cmd->add_option("--jobs", jobs, "worker threads (0 = all available)")->capture_default_str();
  add_output_options(count_cmd, output);
  count_cmd->callback([&] {
    action = [&] {
      const std::uint64_t limit = budget ? *budget : budget_from_environment();
      return cmd_count(ffcount::NormalFormSpec(count_p, count_q1), prime, target, limit, jobs);
    };
  });

  std::string scope = "all";
  verify::Options verify_options;
  auto* verify_cmd = app.add_subcommand("verify", "Run the property suites");
  verify_cmd->add_option("--scope", scope, "all, core, chow, closure or ffcount")->capture_default_str();
  verify_cmd->add_option("--pmax", verify_options.pmax, "largest matrix size in sweeps")->capture_default_str();
  verify_cmd->add_option("--seed", verify_options.seed, "seed for random cases")->capture_default_str();
  add_output_options(verify_cmd, output);
  verify_cmd->callback([&] {
    action = [&] {
      if (verify_options.pmax < 1 || verify_options.pmax > 12) {
        throw ValidationError("pmax must satisfy 1 <= pmax <= 12");
      }
      return cmd_verify(scope, verify_options);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    report::parse_format(output.format);
    const Report r = action();
    return emit(r, output, out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << '\n';
    return kBudgetRefused;
  } catch (const std::exception& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace dqp::cli
