#include "lpa/cli/report.hpp"

#include <fstream>
#include <stdexcept>

#include "lpa/json_io.hpp"

namespace lpa::cli {

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("table " + name + ": row width mismatch");
  }
  rows.push_back(std::move(row));
}

std::string cell(double x) { return format_double(x); }
std::string cell(long long x) { return std::to_string(x); }
std::string cell(const std::string& s) { return s; }

Table curve_table(std::string name, const Curve& curve,
                  const std::string& value_name) {
  Table t{std::move(name), {"parameter_re", "parameter_im", value_name}, {}};
  for (const auto& pt : curve) {
    t.add_row({cell(pt.parameter.real()), cell(pt.parameter.imag()), cell(pt.value)});
  }
  return t;
}

bool RunReport::passed() const {
  for (const auto& v : verdicts) {
    if (!v.pass) return false;
  }
  return true;
}

void to_json(nlohmann::json& j, const Verdict& v) {
  j = {{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}};
}

void to_json(nlohmann::json& j, const RunReport& r) {
  nlohmann::json tables = nlohmann::json::array();
  for (const auto& t : r.tables) tables.push_back(t.name + ".csv");
  j = {{"command", r.command},
       {"inputs", r.inputs},
       {"results", r.results},
       {"verdicts", r.verdicts},
       {"tables", tables},
       {"pass", r.passed()}};
}

void write_table(std::ostream& out, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out << (i ? "," : "") << t.columns[i];
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace

void write_outputs(const RunReport& report, const std::filesystem::path& dir,
                   const nlohmann::json& timing) {
  std::filesystem::create_directories(dir);
  write_file(dir / "report.json", nlohmann::json(report).dump(2) + "\n");
  for (const auto& t : report.tables) {
    std::ofstream out(dir / (t.name + ".csv"), std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + t.name + ".csv");
    write_table(out, t);
  }
  write_file(dir / "timing.json", timing.dump(2) + "\n");
}

}  // namespace lpa::cli
