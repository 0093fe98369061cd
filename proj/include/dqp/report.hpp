#pragma once

// Structured command output rendered as a text table, JSON, or long-format CSV.
// No floating point appears anywhere: integers are exact, rationals are "num/den".

#include <chrono>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dqp/bigint.hpp"

namespace dqp::report {

inline constexpr const char* kSchema = "dqp-invariants/1";

using Value = std::variant<BigInt, Rational, std::string, bool>;

inline Value num(const BigInt& v) { return Value(v); }
inline Value num(long long v) { return Value(BigInt(v)); }
inline Value text(std::string v) { return Value(std::move(v)); }

struct Table {
  std::string name;
  std::vector<std::string> columns;  // columns[0] is the row key
  std::vector<std::vector<Value>> rows;
};

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, Value>> inputs;
  std::vector<std::pair<std::string, Value>> summary;
  std::vector<Table> tables;
  std::vector<std::string> notes;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::chrono::nanoseconds>> elapsed;

  bool all_passed() const;
};

enum class Format { table, json, csv };

Format parse_format(const std::string& name);

std::string render(const Report& report, Format format, bool include_timings = false);

}  // namespace dqp::report
