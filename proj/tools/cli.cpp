#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "rkhs/json_io.hpp"

namespace rkhs::cli {
namespace {

struct SpaceFlags {
  std::string family = "bergman";
  double alpha = 0.0;
  double beta0 = 0.0;
  int p = 0;
  int m = 0;
  double R = 1.0;
  double theta = 1.0;
  double s = 2.0;
};

struct Options {
  SpaceFlags space;
  std::vector<std::string> xi;
  std::vector<std::string> z;
  bool series = false;
  int truncation = 800;
  std::string format = "text";

  // transform
  std::string transform_family = "disk";
  std::string kind = "full";
  int q = 0;
  std::string input;
  std::string spec;
  int repeat = 1;
  int n_radial = 32;
  int n_angular = 128;

  // verify
  std::uint64_t seed = SuiteConfig{}.seed;
  std::vector<std::string> groups;
  std::optional<double> tolerance;
  bool timings = false;

  // limit
  std::string limit_kind = "bargmann";
  std::vector<double> sequence;

  // norm
  std::vector<int> indices;
  bool quadrature = false;
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string text_complex(complex z) {
  return num(z.real()) + (z.imag() < 0 || std::signbit(z.imag()) ? "" : "+") + num(z.imag()) + "i";
}

complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {re, 0.0};
    }
    const std::string re_text = text.substr(0, comma);
    const std::string im_text = text.substr(comma + 1);
    const double re = std::stod(re_text, &used);
    if (used != re_text.size()) throw std::invalid_argument(text);
    const double im = std::stod(im_text, &used);
    if (used != im_text.size()) throw std::invalid_argument(text);
    return {re, im};
  } catch (const std::logic_error&) {
    throw DomainError("cannot parse complex number '" + text + "' (expected RE or RE,IM)");
  }
}

SpaceParams make_space(const SpaceFlags& f) {
  SpaceParams space;
  if (f.family == "bergman") {
    space = BergmanDirichletParams{f.alpha, f.beta0, f.p, f.R, f.m};
  } else if (f.family == "bargmann") {
    space = BargmannDirichletParams{f.theta, f.beta0, f.p, f.m};
  } else if (f.family == "hardy") {
    space = HardyDirichletParams{f.beta0, f.p, f.m, f.s};
  } else {
    throw DomainError("unknown family '" + f.family + "' (bergman, bargmann, hardy)");
  }
  validate(space);
  return space;
}

std::string read_argument(const std::string& text) {
  if (text.empty() || text[0] != '@') return text;
  std::ifstream file(text.substr(1));
  if (!file) throw DomainError("cannot read '" + text.substr(1) + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void add_space_flags(CLI::App& cmd, SpaceFlags& f, bool with_family = true) {
  if (with_family) {
    cmd.add_option("--family", f.family, "bergman | bargmann | hardy")
        ->check(CLI::IsMember({"bergman", "bargmann", "hardy"}));
  }
  cmd.add_option("--alpha", f.alpha, "Bergman weight exponent (> -1)");
  cmd.add_option("--beta0", f.beta0, "Base exponent in (-1, 0]");
  cmd.add_option("--p", f.p, "Pole shift p >= 0");
  cmd.add_option("--m", f.m, "Dirichlet order m >= 0");
  cmd.add_option("--R", f.R, "Disk radius");
  cmd.add_option("--theta", f.theta, "Gaussian scale (> 0)");
  cmd.add_option("--s", f.s, "Hardy exponent");
}

void add_format_flag(CLI::App& cmd, std::string& format) {
  cmd.add_option("--format", format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
}

int cmd_kernel(const Options& o, std::ostream& out) {
  const SpaceParams space = make_space(o.space);
  if (o.xi.empty()) throw DomainError("kernel: at least one --xi is required");
  std::vector<complex> points;
  for (const auto& x : o.xi) points.push_back(parse_complex(x));

  struct Row {
    complex xi, value, series;
    double difference;
  };
  std::vector<Row> rows;
  for (complex xi : points) {
    Row row{xi, kernel(xi, space), {}, 0.0};
    if (o.series) {
      if (const auto* b = std::get_if<BergmanDirichletParams>(&space)) {
        row.series = bergman_kernel_series(xi, *b, o.truncation);
      } else if (const auto* h = std::get_if<HardyDirichletParams>(&space)) {
        row.series = hardy_kernel_series(xi, *h);
      } else {
        row.series = kernel_series(xi, space);
      }
      row.difference = std::abs(row.value - row.series);
    }
    rows.push_back(row);
  }

  if (o.format == "json") {
    out << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Row& r = rows[i];
      out << (i ? ",\n " : "\n ") << "{\"xi\": [" << format_number(r.xi.real()) << ", "
          << format_number(r.xi.imag()) << "], \"value\": [" << format_number(r.value.real())
          << ", " << format_number(r.value.imag()) << "]";
      if (o.series) {
        out << ", \"series\": [" << format_number(r.series.real()) << ", "
            << format_number(r.series.imag())
            << "], \"difference\": " << format_number(r.difference);
      }
      out << "}";
    }
    out << "\n]\n";
  } else if (o.format == "csv") {
    out << "xi_re,xi_im,value_re,value_im" << (o.series ? ",series_re,series_im,difference" : "")
        << "\n";
    for (const Row& r : rows) {
      out << num(r.xi.real()) << ',' << num(r.xi.imag()) << ',' << num(r.value.real()) << ','
          << num(r.value.imag());
      if (o.series) {
        out << ',' << num(r.series.real()) << ',' << num(r.series.imag()) << ','
            << num(r.difference);
      }
      out << "\n";
    }
  } else {
    for (const Row& r : rows) {
      out << text_complex(r.value);
      if (o.series) out << "  series " << text_complex(r.series) << "  diff " << num(r.difference);
      out << "\n";
    }
  }
  return kOk;
}

TransformSpec make_spec(const Options& o) {
  if (!o.spec.empty()) return parse_transform_spec(read_argument(o.spec));
  TransformSpec spec;
  const auto family = parse_family(o.transform_family);
  if (!family) throw DomainError("transform: family must be disk or fock");
  const auto kind = parse_transform_kind(o.kind);
  if (!kind) throw DomainError("transform: unknown kind '" + o.kind + "'");
  spec.family = *family;
  spec.kind = *kind;
  spec.p = o.space.p;
  spec.q = o.q;
  spec.params = {o.space.alpha, o.space.theta, o.space.beta0};
  spec.validate();
  return spec;
}

int cmd_transform(const Options& o, std::ostream& out) {
  const TransformSpec spec = make_spec(o);
  if (o.input.empty()) throw DomainError("transform: --input is required");
  if (o.repeat < 1) throw DomainError("transform: --repeat must be >= 1");
  if (o.repeat > 1 && spec.p != spec.q) {
    throw DomainError("transform: --repeat needs p == q");
  }
  const LaurentSeries input = parse_laurent(read_argument(o.input));
  LaurentSeries output = input;
  for (int i = 0; i < o.repeat; ++i) output = apply_transform_coeff(spec, output);

  struct Evaluation {
    complex z, coefficient, quadrature;
  };
  std::vector<Evaluation> evaluations;
  if (!o.z.empty()) {
    if (o.repeat != 1) throw DomainError("transform: --z needs --repeat 1");
    const QuadratureRule rule = source_quadrature(spec, o.n_radial, o.n_angular);
    for (const auto& text : o.z) {
      const complex z = parse_complex(text);
      evaluations.push_back({z, output.empty() ? 0.0 : output(z),
                             apply_transform_quadrature(spec, input, z, rule)});
    }
  }

  if (o.format == "json") {
    out << "{\"spec\": " << to_json(spec) << ",\n \"input\": " << to_json(input)
        << ",\n \"output\": " << to_json(output) << ",\n \"evaluations\": [";
    for (std::size_t i = 0; i < evaluations.size(); ++i) {
      const Evaluation& e = evaluations[i];
      out << (i ? ", " : "") << "{\"z\": [" << format_number(e.z.real()) << ", "
          << format_number(e.z.imag()) << "], \"coefficient\": ["
          << format_number(e.coefficient.real()) << ", " << format_number(e.coefficient.imag())
          << "], \"quadrature\": [" << format_number(e.quadrature.real()) << ", "
          << format_number(e.quadrature.imag())
          << "], \"difference\": " << format_number(std::abs(e.coefficient - e.quadrature))
          << "}";
    }
    out << "]}\n";
  } else if (o.format == "csv") {
    out << "index,re,im\n";
    for (int n = output.min_index(); n <= output.max_index(); ++n) {
      out << n << ',' << num(output[n].real()) << ',' << num(output[n].imag()) << "\n";
    }
  } else {
    out << to_json(output) << "\n";
    for (const Evaluation& e : evaluations) {
      out << "z=" << text_complex(e.z) << "  coefficient " << text_complex(e.coefficient)
          << "  quadrature " << text_complex(e.quadrature) << "  diff "
          << num(std::abs(e.coefficient - e.quadrature)) << "\n";
    }
  }
  return kOk;
}

void print_reports(const std::vector<VerificationReport>& reports, const Options& o,
                   std::ostream& out) {
  if (o.format == "json") {
    out << to_json(reports, o.timings);
  } else if (o.format == "csv") {
    out << to_csv(reports);
  } else {
    out << format_report_table(reports);
  }
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed) return false;
  }
  return true;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteConfig config;
  config.seed = o.seed;
  if (!o.groups.empty()) config.groups = o.groups;
  config.tolerance = o.tolerance;
  const auto reports = run_suite(config);
  print_reports(reports, o, out);
  return all_passed(reports) ? kOk : kVerificationFailed;
}

int cmd_limit(const Options& o, std::ostream& out) {
  if (o.xi.size() != 1) throw DomainError("limit: exactly one --xi is required");
  const LimitKind kind = o.limit_kind == "hardy" ? LimitKind::hardy : LimitKind::bargmann;
  std::vector<double> sequence = o.sequence;
  if (sequence.empty()) {
    sequence = kind == LimitKind::bargmann ? std::vector<double>{5, 10, 20, 40, 100}
                                           : std::vector<double>{-0.9, -0.99, -0.999};
  }
  const LimitParams params{o.space.theta, o.space.beta0, o.space.p, o.space.m};
  VerificationReport report =
      check_limit(kind, parse_complex(o.xi.front()), params, sequence, o.tolerance.value_or(1e-2));
  print_reports({report}, o, out);
  return report.passed ? kOk : kVerificationFailed;
}

int cmd_norm(const Options& o, std::ostream& out) {
  const SpaceParams space = make_space(o.space);
  if (o.indices.empty() && o.input.empty()) {
    throw DomainError("norm: give --n indices and/or --input series");
  }
  const bool json = o.format == "json";
  const bool csv = o.format == "csv";
  if (json) out << "{";
  if (csv) out << "quantity,value\n";
  if (!o.indices.empty()) {
    if (json) out << "\"monomial_norms\": [";
    for (std::size_t i = 0; i < o.indices.size(); ++i) {
      const int n = o.indices[i];
      const double value = monomial_norm(n, space);
      std::optional<double> quad;
      if (o.quadrature) {
        const LaurentSeries zn = LaurentSeries::monomial(n);
        quad = std::sqrt(dirichlet_inner_product_quadrature(zn, zn, space).real());
      }
      if (json) {
        out << (i ? ", " : "") << "{\"n\": " << n << ", \"norm\": " << format_number(value);
        if (quad) out << ", \"quadrature_norm\": " << format_number(*quad);
        out << "}";
      } else if (csv) {
        out << "norm_z^" << n << ',' << num(value) << "\n";
        if (quad) out << "quadrature_norm_z^" << n << ',' << num(*quad) << "\n";
      } else {
        out << "||z^" << n << "|| = " << num(value);
        if (quad) out << "  quadrature " << num(*quad);
        out << "\n";
      }
    }
    if (json) out << "]";
  }
  if (!o.input.empty()) {
    const LaurentSeries f = parse_laurent(read_argument(o.input));
    const double value = dirichlet_norm(f, space);
    std::optional<double> quad;
    if (o.quadrature) {
      quad = std::sqrt(dirichlet_inner_product_quadrature(f, f, space).real());
    }
    if (json) {
      out << (o.indices.empty() ? "" : ", ") << "\"norm\": " << format_number(value);
      if (quad) out << ", \"quadrature_norm\": " << format_number(*quad);
    } else if (csv) {
      out << "norm," << num(value) << "\n";
      if (quad) out << "quadrature_norm," << num(*quad) << "\n";
    } else {
      out << "||f|| = " << num(value) << "\n";
      if (quad) out << "||f|| (quadrature) = " << num(*quad) << "\n";
    }
  }
  if (json) out << "}\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reproducing kernels and Segal-Bargmann transforms on Bergman, Bargmann-Fock "
               "and Hardy type spaces",
               "rkhs"};
  app.require_subcommand(1);
  Options o;

  auto* kernel_cmd = app.add_subcommand("kernel", "Evaluate a reproducing kernel K(xi)");
  add_space_flags(*kernel_cmd, o.space);
  kernel_cmd->add_option("--xi", o.xi, "Evaluation point RE or RE,IM (repeatable)");
  kernel_cmd->add_flag("--series", o.series, "Also print the coefficient series and difference");
  kernel_cmd->add_option("--truncation", o.truncation, "Last index of the Bergman series");
  add_format_flag(*kernel_cmd, o.format);

  auto* transform_cmd = app.add_subcommand("transform", "Apply a Segal-Bargmann transform");
  transform_cmd->add_option("--family", o.transform_family, "disk | fock");
  transform_cmd->add_option("--kind", o.kind, "full|even-even|odd-odd|even-odd|involution or D|G|J|S|T");
  add_space_flags(*transform_cmd, o.space, false);
  transform_cmd->add_option("--q", o.q, "Target pole shift q >= 0");
  transform_cmd->add_option("--spec", o.spec, "Transform spec as JSON (or @file); overrides flags");
  transform_cmd->add_option("--input", o.input, "Laurent series as JSON (or @file)");
  transform_cmd->add_option("--repeat", o.repeat, "Apply the transform this many times");
  transform_cmd->add_option("--z", o.z, "Evaluate the image at RE,IM by both paths (repeatable)");
  transform_cmd->add_option("--radial", o.n_radial, "Radial quadrature nodes");
  transform_cmd->add_option("--angular", o.n_angular, "Angular quadrature nodes");
  add_format_flag(*transform_cmd, o.format);

  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
  verify_cmd->add_option("--seed", o.seed, "Seed for random inputs");
  verify_cmd->add_option("--groups", o.groups, "Comma-separated check groups")->delimiter(',');
  verify_cmd->add_option("--tol", o.tolerance, "Override every tolerance");
  verify_cmd->add_flag("--timings", o.timings, "Include runtime_ms in JSON output");
  add_format_flag(*verify_cmd, o.format);

  auto* limit_cmd = app.add_subcommand("limit", "Scan a kernel limit (R -> inf or alpha -> -1)");
  limit_cmd->add_option("--kind", o.limit_kind, "bargmann | hardy")
      ->check(CLI::IsMember({"bargmann", "hardy"}));
  add_space_flags(*limit_cmd, o.space, false);
  limit_cmd->add_option("--xi", o.xi, "Evaluation point RE or RE,IM");
  limit_cmd->add_option("--sequence", o.sequence, "Comma-separated R (bargmann) or alpha (hardy) values")
      ->delimiter(',');
  limit_cmd->add_option("--tol", o.tolerance, "Final relative error tolerance");
  add_format_flag(*limit_cmd, o.format);

  auto* norm_cmd = app.add_subcommand("norm", "Monomial and series norms");
  add_space_flags(*norm_cmd, o.space);
  norm_cmd->add_option("--n", o.indices, "Monomial indices")->delimiter(',');
  norm_cmd->add_option("--input", o.input, "Laurent series as JSON (or @file)");
  norm_cmd->add_flag("--quadrature", o.quadrature, "Also compute the norm by quadrature");
  add_format_flag(*norm_cmd, o.format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*kernel_cmd) return cmd_kernel(o, out);
    if (*transform_cmd) return cmd_transform(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*limit_cmd) return cmd_limit(o, out);
    if (*norm_cmd) return cmd_norm(o, out);
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kConvergenceError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace rkhs::cli
