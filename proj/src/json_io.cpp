#include "rkhs/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace rkhs {
namespace {

using nlohmann::json;

json parse_object(std::string_view text, const char* what) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string(what) + ": malformed JSON: " + e.what());
  }
  if (!doc.is_object()) throw DomainError(std::string(what) + ": expected a JSON object");
  return doc;
}

template <typename T>
T field(const json& doc, const char* key, const char* what) {
  if (!doc.contains(key)) {
    throw DomainError(std::string(what) + ": missing field '" + key + "'");
  }
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw DomainError(std::string(what) + ": bad field '" + key + "': " + e.what());
  }
}

std::string quote(std::string_view s) { return json(std::string(s)).dump(); }

std::string format_complex(complex z) {
  return "[" + format_number(z.real()) + ", " + format_number(z.imag()) + "]";
}

std::string format_param(const ParamValue& value) {
  struct {
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return quote(v); }
    std::string operator()(complex v) const { return format_complex(v); }
  } visitor;
  return std::visit(visitor, value);
}

std::string format_param_plain(const ParamValue& value) {
  if (const auto* s = std::get_if<std::string>(&value)) return *s;
  if (const auto* z = std::get_if<complex>(&value)) {
    return format_number(z->real()) + "," + format_number(z->imag());
  }
  return format_param(value);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "\"nan\"";
  if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

LaurentSeries parse_laurent(std::string_view text) {
  constexpr const char* what = "Laurent series";
  const json doc = parse_object(text, what);
  const int min_index = field<int>(doc, "min_index", what);
  const json coefficients = field<json>(doc, "coefficients", what);
  if (!coefficients.is_array()) throw DomainError("Laurent series: coefficients must be an array");
  std::vector<complex> values;
  for (const json& c : coefficients) {
    if (c.is_number()) {
      values.emplace_back(c.get<double>(), 0.0);
    } else if (c.is_array() && c.size() == 2 && c[0].is_number() && c[1].is_number()) {
      values.emplace_back(c[0].get<double>(), c[1].get<double>());
    } else {
      throw DomainError("Laurent series: each coefficient must be a number or [re, im]");
    }
  }
  return LaurentSeries(min_index, std::move(values));
}

std::string to_json(const LaurentSeries& f) {
  std::string out = "{\"min_index\": " + std::to_string(f.min_index()) + ", \"coefficients\": [";
  bool first = true;
  for (complex c : f.coefficients()) {
    if (!first) out += ", ";
    out += format_complex(c);
    first = false;
  }
  return out + "]}";
}

TransformSpec parse_transform_spec(std::string_view text) {
  constexpr const char* what = "transform spec";
  const json doc = parse_object(text, what);
  TransformSpec spec;
  const auto family = parse_family(field<std::string>(doc, "family", what));
  if (!family) throw DomainError("transform spec: family must be disk or fock");
  const auto kind = parse_transform_kind(field<std::string>(doc, "kind", what));
  if (!kind) throw DomainError("transform spec: unknown kind");
  spec.family = *family;
  spec.kind = *kind;
  spec.p = field<int>(doc, "p", what);
  spec.q = field<int>(doc, "q", what);
  spec.params.beta0 = field<double>(doc, "beta0", what);
  if (spec.family == Family::disk) {
    spec.params.alpha = field<double>(doc, "alpha", what);
  } else {
    spec.params.theta = field<double>(doc, "theta", what);
  }
  spec.validate();
  return spec;
}

std::string to_json(const TransformSpec& spec) {
  std::string out = "{\"family\": " + quote(to_string(spec.family)) +
                    ", \"kind\": " + quote(to_string(spec.kind)) +
                    ", \"p\": " + std::to_string(spec.p) + ", \"q\": " + std::to_string(spec.q);
  if (spec.family == Family::disk) {
    out += ", \"alpha\": " + format_number(spec.params.alpha);
  } else {
    out += ", \"theta\": " + format_number(spec.params.theta);
  }
  return out + ", \"beta0\": " + format_number(spec.params.beta0) + "}";
}

std::string to_json(const std::vector<VerificationReport>& reports, bool include_runtime) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const VerificationReport& r = reports[i];
    out << (i == 0 ? "\n" : ",\n");
    out << "  {\"check_name\": " << quote(r.check_name) << ", \"parameters\": {";
    for (std::size_t k = 0; k < r.parameters.size(); ++k) {
      if (k > 0) out << ", ";
      out << quote(r.parameters[k].first) << ": " << format_param(r.parameters[k].second);
    }
    out << "}, \"measured_error\": " << format_number(r.measured_error)
        << ", \"tolerance\": " << format_number(r.tolerance)
        << ", \"passed\": " << (r.passed ? "true" : "false");
    if (include_runtime) out << ", \"runtime_ms\": " << format_number(r.runtime_ms);
    out << "}";
  }
  out << (reports.empty() ? "]\n" : "\n]\n");
  return out.str();
}

std::string to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "check_name,family,measured_error,tolerance,passed,parameters\n";
  for (const VerificationReport& r : reports) {
    std::string family;
    std::string params;
    for (const auto& [key, value] : r.parameters) {
      if (key == "family") {
        family = format_param_plain(value);
        continue;
      }
      if (!params.empty()) params += ';';
      params += key + "=" + format_param_plain(value);
    }
    char numbers[96];
    std::snprintf(numbers, sizeof numbers, "%.17g,%.17g", r.measured_error, r.tolerance);
    out << csv_field(r.check_name) << ',' << csv_field(family) << ',' << numbers << ','
        << (r.passed ? "true" : "false") << ',' << csv_field(params) << '\n';
  }
  return out.str();
}

}  // namespace rkhs
