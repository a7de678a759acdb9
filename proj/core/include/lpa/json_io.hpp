#pragma once

// Wire formats shared by the library and the CLI.
//
//   CoeffSeq      [[re, im], ...], index = coefficient degree
//   OrthoReport   {"bj_sum": [re, im], "beta_star": [re, im] | null,
//                  "min_value": x | null, "orthogonal": bool}
//   NormBracket   {"lower", "upper", "witness": CoeffSeq,
//                  "method": {"lower": ..., "upper": ...}}
//   Curve         CSV with a header row, plus {"min", "max", "argmin", "argmax"}

#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "lpa/geometry.hpp"
#include "lpa/multiplier.hpp"
#include "lpa/orthogonality.hpp"
#include "lpa/seqspace.hpp"

namespace lpa {

nlohmann::json complex_to_json(Complex c);
// Accepts [re, im] or a bare real number.
Complex complex_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const CoeffSeq& f);
// Entries may be [re, im] pairs or bare reals. Throws nlohmann::json
// exceptions or std::invalid_argument on malformed input.
void from_json(const nlohmann::json& j, CoeffSeq& f);

void to_json(nlohmann::json& j, const OrthoReport& r);
void to_json(nlohmann::json& j, const NormBracket& b);
void to_json(nlohmann::json& j, const CurveSummary& s);

// Shortest decimal form that round-trips exactly (at most 17 digits).
std::string format_double(double x);

// CSV with columns `parameter_re,parameter_im,<value_name>`.
void write_curve_csv(std::ostream& out, const Curve& curve,
                     std::string_view value_name);

}  // namespace lpa
