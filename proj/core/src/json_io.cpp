#include "lpa/json_io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace lpa {

nlohmann::json complex_to_json(Complex c) {
  return nlohmann::json::array({c.real(), c.imag()});
}

Complex complex_from_json(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw std::invalid_argument("expected a number or an [re, im] pair");
}

void to_json(nlohmann::json& j, const CoeffSeq& f) {
  j = nlohmann::json::array();
  for (Complex c : f.coeffs()) j.push_back(complex_to_json(c));
}

void from_json(const nlohmann::json& j, CoeffSeq& f) {
  if (!j.is_array()) {
    throw std::invalid_argument("coefficient sequence must be a JSON array");
  }
  std::vector<Complex> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(complex_from_json(e));
  f = CoeffSeq(std::move(c));
}

void to_json(nlohmann::json& j, const OrthoReport& r) {
  j = {{"bj_sum", complex_to_json(r.bj_sum)},
       {"beta_star", r.beta_star ? complex_to_json(*r.beta_star) : nlohmann::json(nullptr)},
       {"min_value", r.min_value ? nlohmann::json(*r.min_value) : nlohmann::json(nullptr)},
       {"orthogonal", r.orthogonal},
       {"relative_residual", r.relative_residual}};
}

void to_json(nlohmann::json& j, const NormBracket& b) {
  j = {{"kind", b.kind == BracketKind::Multiplier ? "multiplier" : "functional"},
       {"lower", b.lower},
       {"upper", std::isinf(b.upper) ? nlohmann::json("inf") : nlohmann::json(b.upper)},
       {"witness", b.lower_witness},
       {"method", {{"lower", b.lower_method}, {"upper", b.upper_method}}},
       {"tight", b.tight}};
}

void to_json(nlohmann::json& j, const CurveSummary& s) {
  j = {{"min", s.min},
       {"max", s.max},
       {"argmin", complex_to_json(s.argmin)},
       {"argmax", complex_to_json(s.argmax)}};
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void write_curve_csv(std::ostream& out, const Curve& curve,
                     std::string_view value_name) {
  out << "parameter_re,parameter_im," << value_name << '\n';
  for (const auto& pt : curve) {
    out << format_double(pt.parameter.real()) << ','
        << format_double(pt.parameter.imag()) << ','
        << format_double(pt.value) << '\n';
  }
}

}  // namespace lpa
