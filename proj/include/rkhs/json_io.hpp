#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rkhs/verify.hpp"

namespace rkhs {

/// Numbers are written with 17 significant digits; non-finite values become
/// the strings "inf", "-inf" and "nan".
std::string format_number(double x);

/// {"min_index": n, "coefficients": [[re, im], ...]}. Malformed input throws
/// DomainError.
LaurentSeries parse_laurent(std::string_view json);
std::string to_json(const LaurentSeries& f);

/// {"family", "kind", "p", "q", "alpha"?, "theta"?, "beta0"}.
TransformSpec parse_transform_spec(std::string_view json);
std::string to_json(const TransformSpec& spec);

/// Array of report objects. runtime_ms is omitted unless requested so that
/// the output is byte-identical across runs.
std::string to_json(const std::vector<VerificationReport>& reports,
                    bool include_runtime = false);

/// Header: check_name,family,measured_error,tolerance,passed,parameters
/// with parameters as key=value pairs separated by ';'.
std::string to_csv(const std::vector<VerificationReport>& reports);

}  // namespace rkhs
