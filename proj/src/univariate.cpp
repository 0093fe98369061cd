#include "dqp/univariate.hpp"

#include <algorithm>
#include <sstream>

#include "dqp/errors.hpp"

namespace dqp {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, int degree) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1, 0);
  coeffs.back() = c;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::operator()(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial operator+(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  std::vector<BigInt> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) out[i] += lhs.coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  std::vector<BigInt> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) out[i] += lhs.coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] -= rhs.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  if (lhs.coeffs_.empty() || rhs.coeffs_.empty()) return {};
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (magnitude != 1 || k == 0) out << magnitude;
    if (k > 0) {
      if (magnitude != 1) out << "*";
      out << "t";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

IntPolynomial interpolate(const std::vector<std::pair<BigInt, BigInt>>& samples) {
  const std::size_t count = samples.size();
  std::vector<Rational> result(count, 0);
  for (std::size_t k = 0; k < count; ++k) {
    // Basis polynomial prod_{j != k} (t - t_j) / (t_k - t_j), built by
    // multiplying in one linear factor at a time.
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < count; ++j) {
      if (j == k) continue;
      if (samples[j].first == samples[k].first) {
        throw ValidationError("interpolation nodes must be distinct");
      }
      std::vector<Rational> next(basis.size() + 1, 0);
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * Rational(samples[j].first);
      }
      basis = std::move(next);
      denom *= Rational(samples[k].first - samples[j].first);
    }
    const Rational scale = Rational(samples[k].second) / denom;
    for (std::size_t d = 0; d < basis.size(); ++d) result[d] += basis[d] * scale;
  }
  std::vector<BigInt> coeffs;
  for (const Rational& r : result) {
    if (boost::multiprecision::denominator(r) != 1) {
      throw CheckFailure("interpolated counting polynomial has non-integer coefficient " +
                         to_string(r));
    }
    coeffs.push_back(boost::multiprecision::numerator(r));
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace dqp
