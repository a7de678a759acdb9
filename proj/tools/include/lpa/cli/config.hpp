#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lpa/seqspace.hpp"

namespace lpa::cli {

// Invalid configuration; the message names the offending field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& command_names();

// Built-in configuration used when no file is given.
nlohmann::json default_config(const std::string& command);

struct Overrides {
  std::optional<double> p;
  std::optional<Complex> w;
  std::optional<long long> n;
  std::optional<long long> iters;
  std::optional<long long> seed;
};

// "RE,IM" or "RE".
Complex parse_complex_flag(const std::string& text);

// Defaults, else the file (which must then carry every field of the command),
// then flags on top. The result is validated before it is returned.
nlohmann::json resolve_config(const std::string& command,
                              const std::optional<std::filesystem::path>& file,
                              const Overrides& flags);

struct NormParams {
  CoeffSeq f;
  std::vector<double> p_grid;
};

struct OrthoParams {
  CoeffSeq f, g;
  double p = 2.0;
  double tol = 1e-9;
};

struct InnerParams {
  Complex w;
  double p = 2.0;
  std::size_t N = 0;
  int max_shift = 0;
  double tol = 0.0;
};

struct MultnormParams {
  CoeffSeq phi;
  double p = 2.0;
  std::size_t n = 0;
  int iters = 0;
  std::uint64_t seed = 1;
  std::vector<CoeffSeq> test_vectors;
};

struct GeometryParams {
  std::string demo;  // lwp | uwp | lpyth | upyth
  double r = 2.0;
  double C = 1.0;
  // Exponents for lwp, t values for uwp, c values for the Pythagorean demos.
  std::vector<Complex> grid;
};

struct FunctionalParams {
  CoeffSeq lambda;
  double p = 2.0;
  std::vector<Complex> w_grid;
  std::vector<CoeffSeq> tests;
};

struct ReportAllParams {
  std::uint64_t seed = 1;
  int iters = 0;
};

// Each throws ConfigError on missing, unknown or out-of-range fields.
NormParams parse_norm(const nlohmann::json& j);
OrthoParams parse_ortho(const nlohmann::json& j);
InnerParams parse_inner(const nlohmann::json& j);
MultnormParams parse_multnorm(const nlohmann::json& j);
GeometryParams parse_geometry(const nlohmann::json& j);
FunctionalParams parse_functional(const nlohmann::json& j);
ReportAllParams parse_report_all(const nlohmann::json& j);

// w_j = 0.09 j exp(2 pi i j / 10), j = 1..10.
std::vector<Complex> default_w_grid();

}  // namespace lpa::cli
