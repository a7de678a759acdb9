#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lpa/geometry.hpp"

namespace lpa::cli {

// One CSV file; every cell is preformatted.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
};

std::string cell(double x);
std::string cell(long long x);
std::string cell(const std::string& s);

// Columns parameter_re, parameter_im, <value_name>.
Table curve_table(std::string name, const Curve& curve,
                  const std::string& value_name);

struct Verdict {
  std::string name;
  bool pass = false;
  nlohmann::json detail = nlohmann::json::object();
};

struct RunReport {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::vector<Verdict> verdicts;
  std::vector<Table> tables;
  // Wall-clock data; written to timing.json only.
  nlohmann::json timing = nlohmann::json::object();

  bool passed() const;
};

void to_json(nlohmann::json& j, const Verdict& v);
// Wall time is deliberately absent so that reruns serialize identically.
void to_json(nlohmann::json& j, const RunReport& r);

void write_table(std::ostream& out, const Table& t);

// report.json, <table>.csv for each table, and timing.json.
void write_outputs(const RunReport& report, const std::filesystem::path& dir,
                   const nlohmann::json& timing);

}  // namespace lpa::cli
