#include "lpa/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>

#include "lpa/geometry.hpp"
#include "lpa/json_io.hpp"

namespace lpa::cli {

namespace {

using nlohmann::json;

// Reads the fields of one command object and remembers which were used.
class Fields {
 public:
  Fields(const json& j, std::string command) : j_(j), command_(std::move(command)) {
    if (!j_.is_object()) fail("", "configuration must be a JSON object");
  }

  [[noreturn]] void fail(const std::string& field, const std::string& what) const {
    throw ConfigError(command_ + ": " +
                      (field.empty() ? what : "field '" + field + "': " + what));
  }

  const json& get(const std::string& name) {
    const auto it = j_.find(name);
    if (it == j_.end()) fail(name, "missing");
    seen_.insert(name);
    return *it;
  }

  double number(const std::string& name) { return as_number(name, get(name)); }

  double above(const std::string& name, double lo) {
    const double x = number(name);
    if (!(x > lo)) fail(name, "must be > " + format_double(lo));
    return x;
  }

  long long integer(const std::string& name, long long lo, long long hi) {
    const json& v = get(name);
    if (!v.is_number_integer()) fail(name, "must be an integer");
    const long long x = v.get<long long>();
    if (x < lo || x > hi) {
      fail(name, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return x;
  }

  Complex complex(const std::string& name) { return as_complex(name, get(name)); }

  std::vector<Complex> complex_list(const std::string& name) {
    const json& v = get(name);
    if (!v.is_array() || v.empty()) fail(name, "must be a nonempty array");
    std::vector<Complex> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out.push_back(as_complex(indexed(name, i), v[i]));
    }
    return out;
  }

  CoeffSeq seq(const std::string& name, bool nonzero) {
    CoeffSeq f = as_seq(name, get(name));
    if (nonzero && f.is_zero()) fail(name, "must have a nonzero coefficient");
    return f;
  }

  std::vector<CoeffSeq> seq_list(const std::string& name) {
    const json& v = get(name);
    if (!v.is_array()) fail(name, "must be an array of coefficient sequences");
    std::vector<CoeffSeq> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      CoeffSeq f = as_seq(indexed(name, i), v[i]);
      if (f.is_zero()) fail(indexed(name, i), "must have a nonzero coefficient");
      out.push_back(std::move(f));
    }
    return out;
  }

  std::string choice(const std::string& name, const std::set<std::string>& allowed) {
    const json& v = get(name);
    if (!v.is_string() || !allowed.count(v.get<std::string>())) {
      std::string list;
      for (const auto& a : allowed) list += (list.empty() ? "" : "|") + a;
      fail(name, "must be one of " + list);
    }
    return v.get<std::string>();
  }

  // Unknown keys are rejected; "command" may repeat the command name.
  void done() const {
    for (const auto& [key, value] : j_.items()) {
      if (key == "command") {
        if (!value.is_string() || value.get<std::string>() != command_) {
          fail("command", "does not match the requested command");
        }
        continue;
      }
      if (!seen_.count(key)) fail(key, "unknown field");
    }
  }

  static std::string indexed(const std::string& name, std::size_t i) {
    return name + "[" + std::to_string(i) + "]";
  }

 private:
  double as_number(const std::string& name, const json& v) const {
    if (!v.is_number()) fail(name, "must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(name, "must be finite");
    return x;
  }

  Complex as_complex(const std::string& name, const json& v) const {
    try {
      return complex_from_json(v);
    } catch (const std::exception&) {
      fail(name, "must be a number or an [re, im] pair");
    }
  }

  CoeffSeq as_seq(const std::string& name, const json& v) const {
    try {
      return v.get<CoeffSeq>();
    } catch (const std::exception&) {
      fail(name, "must be an array of numbers or [re, im] pairs");
    }
  }

  const json& j_;
  std::string command_;
  std::set<std::string> seen_;
};

json seq_json(const CoeffSeq& f) { return json(f); }

json grid_json(const std::vector<Complex>& grid) {
  json out = json::array();
  for (Complex c : grid) out.push_back(complex_to_json(c));
  return out;
}

constexpr long long kMaxIters = 1'000'000;
constexpr long long kMaxSection = 8192;
constexpr long long kMaxTruncation = 100'000;
constexpr long long kMaxShift = 10'000;

void check_exponent(Fields& fs, const std::string& name, double p) {
  if (!(p > 1.0)) fs.fail(name, "must be > 1");
}

json read_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot open config file " + file.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file " + file.string() + " is not valid JSON: " + e.what());
  }
}

void validate(const std::string& command, const json& j) {
  if (command == "norm") parse_norm(j);
  else if (command == "ortho") parse_ortho(j);
  else if (command == "inner") parse_inner(j);
  else if (command == "multnorm") parse_multnorm(j);
  else if (command == "geometry") parse_geometry(j);
  else if (command == "functional") parse_functional(j);
  else parse_report_all(j);
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "norm", "ortho", "inner", "multnorm", "geometry", "functional", "report-all"};
  return names;
}

std::vector<Complex> default_w_grid() {
  std::vector<Complex> grid;
  for (int j = 1; j <= 10; ++j) {
    grid.push_back(std::polar(0.09 * j, 2.0 * std::numbers::pi * j / 10.0));
  }
  return grid;
}

json default_config(const std::string& command) {
  if (command == "norm") {
    return {{"f", seq_json(CoeffSeq{1.0, 1.0})}, {"p_grid", {1.5, 2.0, 3.0}}};
  }
  if (command == "ortho") {
    return {{"f", seq_json(CoeffSeq{1.0, 1.0})},
            {"g", seq_json(CoeffSeq{1.0, -1.0})},
            {"p", 3.0},
            {"tol", 1e-9}};
  }
  if (command == "inner") {
    return {{"w", complex_to_json(0.5)}, {"p", 4.0}, {"N", 200}, {"max_shift", 10},
            {"tol", 1e-8}};
  }
  if (command == "multnorm") {
    return {{"phi", seq_json(CoeffSeq{1.0, 1.0})},
            {"p", 1.5},
            {"n", static_cast<long long>(kDefaultSectionSize)},
            {"iters", kDefaultIterations},
            {"seed", 1},
            {"test_vectors", json::array()}};
  }
  if (command == "geometry") {
    return {{"demo", "upyth"}, {"r", 2.0}, {"C", 1.0}, {"grid", grid_json(default_log_grid())}};
  }
  if (command == "functional") {
    return {{"lambda", seq_json(CoeffSeq{1.0, 1.0})},
            {"p", 1.5},
            {"w_grid", grid_json(default_w_grid())},
            {"tests", {seq_json(CoeffSeq{1.0, 1.0}), seq_json(CoeffSeq{1.0, 2.0, 3.0})}}};
  }
  if (command == "report-all") {
    return {{"seed", 1}, {"iters", kDefaultIterations}};
  }
  throw ConfigError("unknown command '" + command + "'");
}

Complex parse_complex_flag(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(x)) {
      throw ConfigError("--w: expected RE,IM or RE, got '" + text + "'");
    }
    return x;
  };
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {number(text), 0.0};
  return {number(text.substr(0, comma)), number(text.substr(comma + 1))};
}

json resolve_config(const std::string& command,
                    const std::optional<std::filesystem::path>& file,
                    const Overrides& flags) {
  default_config(command);  // rejects unknown commands
  json j = file ? read_file(*file) : default_config(command);
  if (!j.is_object()) throw ConfigError(command + ": configuration must be a JSON object");

  auto inapplicable = [&](const char* flag) {
    throw ConfigError(std::string(flag) + " does not apply to command '" + command + "'");
  };
  if (flags.p) {
    if (command == "norm") j["p_grid"] = json::array({*flags.p});
    else if (command == "geometry" || command == "report-all") inapplicable("--p");
    else j["p"] = *flags.p;
  }
  if (flags.w) {
    if (command == "inner") j["w"] = complex_to_json(*flags.w);
    else if (command == "functional") j["w_grid"] = json::array({complex_to_json(*flags.w)});
    else inapplicable("--w");
  }
  if (flags.n) {
    if (command == "inner") j["N"] = *flags.n;
    else if (command == "multnorm") j["n"] = *flags.n;
    else inapplicable("--n");
  }
  if (flags.iters) {
    if (command == "multnorm" || command == "report-all") j["iters"] = *flags.iters;
    else inapplicable("--iters");
  }
  if (flags.seed) {
    if (command == "multnorm" || command == "report-all") j["seed"] = *flags.seed;
    else inapplicable("--seed");
  }
  validate(command, j);
  j.erase("command");
  return j;
}

NormParams parse_norm(const json& j) {
  Fields fs(j, "norm");
  NormParams out;
  out.f = fs.seq("f", true);
  const json& grid = fs.get("p_grid");
  if (!grid.is_array() || grid.empty()) fs.fail("p_grid", "must be a nonempty array");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto name = Fields::indexed("p_grid", i);
    if (!grid[i].is_number()) fs.fail(name, "must be a number");
    const double p = grid[i].get<double>();
    if (!(p > 1.0) || !std::isfinite(p)) fs.fail(name, "must satisfy 1 < p < inf");
    out.p_grid.push_back(p);
  }
  fs.done();
  return out;
}

OrthoParams parse_ortho(const json& j) {
  Fields fs(j, "ortho");
  OrthoParams out;
  out.f = fs.seq("f", true);
  out.g = fs.seq("g", true);
  out.p = fs.number("p");
  check_exponent(fs, "p", out.p);
  out.tol = fs.above("tol", 0.0);
  fs.done();
  return out;
}

InnerParams parse_inner(const json& j) {
  Fields fs(j, "inner");
  InnerParams out;
  out.w = fs.complex("w");
  if (!(std::abs(out.w) > 0.0 && std::abs(out.w) < 1.0)) fs.fail("w", "must satisfy 0 < |w| < 1");
  out.p = fs.number("p");
  check_exponent(fs, "p", out.p);
  out.N = static_cast<std::size_t>(fs.integer("N", 1, kMaxTruncation));
  out.max_shift = static_cast<int>(fs.integer("max_shift", 1, kMaxShift));
  out.tol = fs.above("tol", 0.0);
  fs.done();
  return out;
}

MultnormParams parse_multnorm(const json& j) {
  Fields fs(j, "multnorm");
  MultnormParams out;
  out.phi = fs.seq("phi", true);
  out.p = fs.number("p");
  check_exponent(fs, "p", out.p);
  out.n = static_cast<std::size_t>(fs.integer("n", 1, kMaxSection));
  out.iters = static_cast<int>(fs.integer("iters", 1, kMaxIters));
  out.seed = static_cast<std::uint64_t>(fs.integer("seed", 0, std::numeric_limits<long long>::max()));
  out.test_vectors = fs.seq_list("test_vectors");
  fs.done();
  return out;
}

GeometryParams parse_geometry(const json& j) {
  Fields fs(j, "geometry");
  GeometryParams out;
  out.demo = fs.choice("demo", {"lwp", "uwp", "lpyth", "upyth"});
  out.r = fs.above("r", 1.0);
  out.C = fs.above("C", 0.0);
  out.grid = fs.complex_list("grid");
  for (std::size_t i = 0; i < out.grid.size(); ++i) {
    const Complex c = out.grid[i];
    const auto name = Fields::indexed("grid", i);
    if (out.demo == "lwp") {
      if (c.imag() != 0.0 || !(c.real() > 1.0)) fs.fail(name, "exponents must be real and > 1");
    } else if (out.demo == "lpyth") {
      const bool real_ok = c.imag() == 0.0 && c.real() > 0.0 && c.real() < 1.0;
      const bool complex_ok = c.imag() != 0.0 && std::abs(c) < 1.0;
      if (!real_ok && !complex_ok) fs.fail(name, "must be real in (0, 1) or non-real with |c| < 1");
    } else if (c == Complex{}) {
      fs.fail(name, "must be nonzero");
    }
  }
  fs.done();
  return out;
}

FunctionalParams parse_functional(const json& j) {
  Fields fs(j, "functional");
  FunctionalParams out;
  out.lambda = fs.seq("lambda", true);
  out.p = fs.number("p");
  check_exponent(fs, "p", out.p);
  out.w_grid = fs.complex_list("w_grid");
  for (std::size_t i = 0; i < out.w_grid.size(); ++i) {
    if (!(std::abs(out.w_grid[i]) < 1.0)) fs.fail(Fields::indexed("w_grid", i), "must satisfy |w| < 1");
  }
  out.tests = fs.seq_list("tests");
  fs.done();
  return out;
}

ReportAllParams parse_report_all(const json& j) {
  Fields fs(j, "report-all");
  ReportAllParams out;
  out.seed = static_cast<std::uint64_t>(fs.integer("seed", 0, std::numeric_limits<long long>::max()));
  out.iters = static_cast<int>(fs.integer("iters", 1, kMaxIters));
  fs.done();
  return out;
}

}  // namespace lpa::cli
