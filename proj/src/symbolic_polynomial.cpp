#include "dqp/symbolic_polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dqp {

namespace {

int degree_of(const SymbolicPolynomial::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

SymbolicPolynomial SymbolicPolynomial::constant(int variable_count, const BigInt& c) {
  SymbolicPolynomial poly(variable_count);
  poly.add_term(Exponents(static_cast<std::size_t>(variable_count), 0), c);
  return poly;
}

SymbolicPolynomial SymbolicPolynomial::variable(int variable_count, int index) {
  if (index < 0 || index >= variable_count) throw std::out_of_range("variable index");
  Exponents e(static_cast<std::size_t>(variable_count), 0);
  e[static_cast<std::size_t>(index)] = 1;
  SymbolicPolynomial poly(variable_count);
  poly.add_term(e, 1);
  return poly;
}

void SymbolicPolynomial::add_term(const Exponents& exponents, const BigInt& coefficient) {
  if (exponents.size() != static_cast<std::size_t>(variable_count_)) {
    throw std::invalid_argument("exponent vector length does not match variable count");
  }
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

SymbolicPolynomial& SymbolicPolynomial::operator+=(const SymbolicPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SymbolicPolynomial& SymbolicPolynomial::operator-=(const SymbolicPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SymbolicPolynomial operator*(const SymbolicPolynomial& lhs, const SymbolicPolynomial& rhs) {
  if (lhs.variable_count_ != rhs.variable_count_) {
    throw std::invalid_argument("variable count mismatch");
  }
  SymbolicPolynomial out(lhs.variable_count_);
  SymbolicPolynomial::Exponents e(static_cast<std::size_t>(lhs.variable_count_));
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

int SymbolicPolynomial::order() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    const int d = degree_of(e);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

int SymbolicPolynomial::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, degree_of(e));
  return best;
}

bool SymbolicPolynomial::is_homogeneous() const { return order() == total_degree(); }

std::string SymbolicPolynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending exponent order reads like the usual lexicographic leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool is_constant = degree_of(e) == 0;
    bool wrote = false;
    if (magnitude != 1 || is_constant) {
      out << magnitude;
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << "*";
      out << names.at(i);
      if (e[i] > 1) out << "^" << e[i];
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace dqp
