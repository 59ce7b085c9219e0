#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace rigidity::cli {

enum class Format { TABLE, CSV, JSON };

struct Check {
  std::string name;
  bool pass = true;
  double residual = 0;
  double tolerance = 0;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
};

struct ReportEnvelope {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  Table results;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  std::string version;

  bool all_pass() const;
  void add_check(std::string name, double residual, double tolerance);
  // Exact comparisons: residual is the number of mismatches.
  void add_exact_check(std::string name, long mismatches);
};

nlohmann::json to_json(const ReportEnvelope& r);
void render(const ReportEnvelope& r, Format f, std::ostream& out);

std::string version_string();

}  // namespace rigidity::cli
