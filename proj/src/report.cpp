#include "dqp/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "dqp/errors.hpp"

namespace dqp::report {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const Value& value) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BigInt>) {
          // Integers beyond int64 would lose precision in most JSON readers.
          if (auto small = to_int64(v)) return Json(*small);
          return Json(v.str());
        } else if constexpr (std::is_same_v<T, Rational>) {
          return Json(to_string(v));
        } else {
          return Json(v);
        }
      },
      value);
}

std::string to_text(const Value& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BigInt>) {
          return v.str();
        } else if constexpr (std::is_same_v<T, Rational>) {
          return to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return v;
        }
      },
      value);
}

long long micros(std::chrono::nanoseconds d) {
  return std::chrono::duration_cast<std::chrono::microseconds>(d).count();
}

std::string render_json(const Report& r, bool timings) {
  Json root;
  root["schema"] = kSchema;
  root["command"] = r.command;
  Json inputs = Json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = to_json(v);
  root["inputs"] = std::move(inputs);
  Json results = Json::object();
  for (const auto& [k, v] : r.summary) results[k] = to_json(v);
  for (const Table& t : r.tables) {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
      Json obj = Json::object();
      for (std::size_t c = 0; c < t.columns.size(); ++c) obj[t.columns[c]] = to_json(row.at(c));
      rows.push_back(std::move(obj));
    }
    results[t.name] = std::move(rows);
  }
  root["results"] = std::move(results);
  if (!r.notes.empty()) root["notes"] = r.notes;
  Json checks = Json::array();
  for (const Check& c : r.checks) {
    checks.push_back(Json{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
  }
  root["checks"] = std::move(checks);
  if (timings) {
    Json elapsed = Json::object();
    for (const auto& [k, d] : r.elapsed) elapsed[k] = micros(d);
    root["elapsed_us"] = std::move(elapsed);
  }
  return root.dump(2) + "\n";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const Report& r, bool timings) {
  std::ostringstream out;
  auto row = [&](const std::string& table, const std::string& key, const std::string& field,
                 const std::string& value) {
    out << csv_field(table) << ',' << csv_field(key) << ',' << csv_field(field) << ','
        << csv_field(value) << '\n';
  };
  out << "table,key,field,value\n";
  row("command", r.command, "schema", kSchema);
  for (const auto& [k, v] : r.inputs) row("inputs", k, "value", to_text(v));
  for (const auto& [k, v] : r.summary) row("summary", k, "value", to_text(v));
  for (const Table& t : r.tables) {
    for (const auto& values : t.rows) {
      const std::string key = to_text(values.at(0));
      for (std::size_t c = 1; c < t.columns.size(); ++c) row(t.name, key, t.columns[c], to_text(values.at(c)));
    }
  }
  for (std::size_t i = 0; i < r.notes.size(); ++i) row("notes", std::to_string(i + 1), "text", r.notes[i]);
  for (const Check& c : r.checks) {
    row("checks", c.name, "status", c.passed ? "pass" : "fail");
    row("checks", c.name, "detail", c.detail);
  }
  if (timings) {
    for (const auto& [k, d] : r.elapsed) row("elapsed_us", k, "value", std::to_string(micros(d)));
  }
  return out.str();
}

std::string render_table(const Report& r, bool timings) {
  std::ostringstream out;
  out << r.command << '\n';
  if (!r.inputs.empty()) {
    out << "  inputs:";
    for (const auto& [k, v] : r.inputs) out << ' ' << k << '=' << to_text(v);
    out << '\n';
  }
  std::size_t width = 0;
  for (const auto& [k, v] : r.summary) width = std::max(width, k.size());
  for (const auto& [k, v] : r.summary) {
    out << "  " << k << std::string(width - k.size() + 2, ' ') << to_text(v) << '\n';
  }
  for (const Table& t : r.tables) {
    out << '\n' << "  " << t.name << '\n';
    std::vector<std::size_t> widths(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) widths[c] = t.columns[c].size();
    for (const auto& values : t.rows) {
      for (std::size_t c = 0; c < t.columns.size(); ++c) widths[c] = std::max(widths[c], to_text(values.at(c)).size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      out << "   ";
      for (std::size_t c = 0; c < cells.size(); ++c) {
        out << ' ' << cells[c];
        if (c + 1 < cells.size()) out << std::string(widths[c] - cells[c].size(), ' ');
      }
      out << '\n';
    };
    line(t.columns);
    for (const auto& values : t.rows) {
      std::vector<std::string> cells;
      for (const Value& v : values) cells.push_back(to_text(v));
      line(cells);
    }
  }
  if (!r.notes.empty()) {
    out << '\n';
    for (const auto& note : r.notes) out << "  note: " << note << '\n';
  }
  if (!r.checks.empty()) {
    out << '\n';
    for (const Check& c : r.checks) {
      out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << '\n';
    }
  }
  if (timings && !r.elapsed.empty()) {
    out << '\n';
    for (const auto& [k, d] : r.elapsed) out << "  elapsed " << k << ": " << micros(d) << " us\n";
  }
  return out.str();
}

}  // namespace

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Format parse_format(const std::string& name) {
  if (name == "table") return Format::table;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw ValidationError("format must be one of table, json, csv (got " + name + ")");
}

std::string render(const Report& report, Format format, bool include_timings) {
  switch (format) {
    case Format::json:
      return render_json(report, include_timings);
    case Format::csv:
      return render_csv(report, include_timings);
    case Format::table:
      break;
  }
  return render_table(report, include_timings);
}

}  // namespace dqp::report
