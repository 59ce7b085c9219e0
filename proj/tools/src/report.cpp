#include "rigidity/cli/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace rigidity::cli {

namespace {

std::string cell(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
    return buf;
  }
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

bool ReportEnvelope::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void ReportEnvelope::add_check(std::string name, double residual, double tolerance) {
  checks.push_back({std::move(name), residual <= tolerance, residual, tolerance});
}

void ReportEnvelope::add_exact_check(std::string name, long mismatches) {
  checks.push_back({std::move(name), mismatches == 0, static_cast<double>(mismatches), 0.0});
}

nlohmann::json to_json(const ReportEnvelope& r) {
  nlohmann::json j;
  j["command"] = r.command;
  j["parameters"] = nlohmann::json::object();
  for (const auto& [k, v] : r.parameters) j["parameters"][k] = v;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.results.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size() && i < r.results.columns.size(); ++i) obj[r.results.columns[i]] = row[i];
    rows.push_back(std::move(obj));
  }
  j["results"] = {{"columns", r.results.columns}, {"rows", rows}};
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back(
        {{"name", c.name}, {"status", c.pass ? "PASS" : "FAIL"}, {"residual", c.residual}, {"tolerance", c.tolerance}});
  j["notes"] = r.notes;
  j["version"] = r.version;
  return j;
}

void render(const ReportEnvelope& r, Format f, std::ostream& out) {
  if (f == Format::JSON) {
    out << to_json(r).dump(2) << '\n';
    return;
  }
  if (f == Format::CSV) {
    for (std::size_t i = 0; i < r.results.columns.size(); ++i) out << (i ? "," : "") << csv_escape(r.results.columns[i]);
    if (!r.results.columns.empty()) out << '\n';
    for (const auto& row : r.results.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(cell(row[i]));
      out << '\n';
    }
    return;
  }

  out << r.command;
  for (const auto& [k, v] : r.parameters) out << "  " << k << "=" << v;
  out << '\n';
  if (!r.results.columns.empty()) {
    std::vector<std::size_t> width(r.results.columns.size());
    for (std::size_t i = 0; i < width.size(); ++i) width[i] = r.results.columns[i].size();
    std::vector<std::vector<std::string>> text;
    for (const auto& row : r.results.rows) {
      text.emplace_back();
      for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
        text.back().push_back(cell(row[i]));
        width[i] = std::max(width[i], text.back().back().size());
      }
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        out << (i ? "  " : "") << cells[i];
        if (i + 1 < cells.size()) out << std::string(width[i] - cells[i].size(), ' ');
      }
      out << '\n';
    };
    line(r.results.columns);
    for (const auto& t : text) line(t);
  }
  for (const auto& n : r.notes) out << n << '\n';
  for (const auto& c : r.checks)
    out << (c.pass ? "PASS " : "FAIL ") << c.name << "  residual " << sci(c.residual) << "  tolerance " << sci(c.tolerance)
        << '\n';
}

std::string version_string() { return RIGIDITY_VERSION; }

}  // namespace rigidity::cli
