#include "dqp/monomial_ideal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "dqp/errors.hpp"

namespace dqp::closure {

int Monomial::total_degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

bool Monomial::divides(const Monomial& other) const {
  if (exponents.size() != other.exponents.size()) {
    throw ValidationError("monomials have different variable counts");
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > other.exponents[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
  if (lhs.exponents.size() != rhs.exponents.size()) {
    throw ValidationError("monomials have different variable counts");
  }
  Monomial out{lhs.exponents};
  for (std::size_t i = 0; i < out.exponents.size(); ++i) out.exponents[i] += rhs.exponents[i];
  return out;
}

MonomialIdeal::MonomialIdeal(int variable_count, std::vector<Monomial> generators)
    : variable_count_(variable_count) {
  if (variable_count < 1) throw ValidationError("an ideal needs at least one variable");
  if (generators.empty()) throw ValidationError("an ideal needs at least one generator");
  for (const Monomial& g : generators) {
    if (g.variable_count() != variable_count) {
      throw ValidationError("generator has " + std::to_string(g.variable_count()) +
                            " exponents, ideal has " + std::to_string(variable_count) +
                            " variables");
    }
    for (int e : g.exponents) {
      if (e < 0) throw ValidationError("negative exponent in generator");
    }
  }
  // Descending order lists y1-heavy generators first.
  std::sort(generators.begin(), generators.end(), std::greater<>());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < generators.size() && !redundant; ++j) {
      redundant = j != i && generators[j].divides(generators[i]);
    }
    if (!redundant) generators_.push_back(generators[i]);
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_subset_of(const MonomialIdeal& other) const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return other.contains(g); });
}

int MonomialIdeal::min_generator_degree() const {
  int best = generators_.front().total_degree();
  for (const Monomial& g : generators_) best = std::min(best, g.total_degree());
  return best;
}

MonomialIdeal power_ideal(const MonomialIdeal& ideal, int e) {
  if (e < 1) throw ValidationError("power must satisfy e >= 1");
  std::vector<Monomial> current = ideal.generators();
  for (int step = 1; step < e; ++step) {
    std::vector<Monomial> next;
    for (const Monomial& a : current) {
      for (const Monomial& g : ideal.generators()) next.push_back(a * g);
    }
    // Minimalize between steps so the product set stays small.
    current = MonomialIdeal(ideal.variable_count(), std::move(next)).generators();
  }
  return MonomialIdeal(ideal.variable_count(), std::move(current));
}

MonomialIdeal pure_powers_ideal(int count, int exponent) {
  std::vector<Monomial> gens;
  for (int i = 0; i < count; ++i) {
    Monomial m{std::vector<int>(static_cast<std::size_t>(count), 0)};
    m.exponents[static_cast<std::size_t>(i)] = exponent;
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(count, std::move(gens));
}

MonomialIdeal variables_ideal(int count) { return pure_powers_ideal(count, 1); }

}  // namespace dqp::closure
