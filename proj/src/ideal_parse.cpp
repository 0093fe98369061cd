#include "dqp/ideal_parse.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "dqp/errors.hpp"

namespace dqp::closure {

namespace {

constexpr int kMaxVariableIndex = 64;
constexpr int kMaxExponent = 1000;

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
  }

  ParsedMonomials parse() {
    ParsedMonomials out;
    if (text_.empty()) fail("empty monomial list");
    while (true) {
      out.monomials.push_back(monomial(out));
      if (pos_ == text_.size()) break;
      expect(',');
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ValidationError("cannot parse monomial list \"" + text_ + "\" at position " +
                          std::to_string(pos_) + ": " + why);
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  int number(int max_value) {
    if (!at_digit()) fail("expected a number");
    long long v = 0;
    while (at_digit()) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > max_value) fail("number exceeds " + std::to_string(max_value));
    }
    return static_cast<int>(v);
  }

  std::map<int, int> monomial(ParsedMonomials& out) {
    std::map<int, int> powers;
    if (at_digit()) {
      if (number(1) != 1) fail("the only constant monomial is 1");
      return powers;
    }
    while (true) {
      if (pos_ >= text_.size() || (text_[pos_] != 'x' && text_[pos_] != 'y')) {
        fail("expected a variable x<i> or y<i>");
      }
      const char letter = text_[pos_++];
      if (out.letter != 0 && out.letter != letter) fail("mixes x and y variables");
      out.letter = letter;
      const int index = number(kMaxVariableIndex);
      if (index < 1) fail("variable indices start at 1");
      int exponent = 1;
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        exponent = number(kMaxExponent);
      }
      powers[index] += exponent;
      out.max_index = std::max(out.max_index, index);
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      if (pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'y')) continue;
      break;
    }
    return powers;
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedMonomials parse_monomials(std::string_view text) { return Parser(text).parse(); }

char common_letter(const std::vector<const ParsedMonomials*>& parts) {
  char letter = 0;
  for (const ParsedMonomials* part : parts) {
    if (part->letter == 0) continue;
    if (letter != 0 && letter != part->letter) {
      throw ValidationError("inputs mix x and y variables");
    }
    letter = part->letter;
  }
  return letter == 0 ? 'y' : letter;
}

Monomial to_monomial(const std::map<int, int>& powers, int variable_count) {
  Monomial m{std::vector<int>(static_cast<std::size_t>(variable_count), 0)};
  for (const auto& [index, exponent] : powers) {
    if (index > variable_count) {
      throw ValidationError("variable index " + std::to_string(index) + " exceeds variable count " +
                            std::to_string(variable_count));
    }
    m.exponents[static_cast<std::size_t>(index - 1)] = exponent;
  }
  return m;
}

MonomialIdeal to_ideal(const ParsedMonomials& parsed, int variable_count) {
  std::vector<Monomial> gens;
  for (const auto& powers : parsed.monomials) gens.push_back(to_monomial(powers, variable_count));
  return MonomialIdeal(variable_count, std::move(gens));
}

}  // namespace dqp::closure
