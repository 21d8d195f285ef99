#include "rkhs/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

namespace rkhs {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<complex> circle_points(int n, double radius) {
  std::vector<complex> z(n);
  for (int j = 0; j < n; ++j) z[j] = std::polar(radius, 2.0 * std::numbers::pi * j / n);
  return z;
}

// Coefficients lo..hi of a Laurent function sampled on |z| = radius.
LaurentSeries circle_coefficients(const std::function<complex(complex)>& f, double radius,
                                  int n_points, int lo, int hi) {
  const std::vector<complex> z = circle_points(n_points, radius);
  std::vector<complex> values(n_points);
  for (int j = 0; j < n_points; ++j) values[j] = f(z[j]);
  std::vector<complex> coefficients;
  coefficients.reserve(hi - lo + 1);
  for (int n = lo; n <= hi; ++n) {
    complex sum(0.0);
    for (int j = 0; j < n_points; ++j) {
      sum += values[j] * std::polar(1.0, -2.0 * std::numbers::pi * n * j / n_points);
    }
    coefficients.push_back(sum / (n_points * std::pow(radius, n)));
  }
  return LaurentSeries(lo, std::move(coefficients));
}

void describe_space(VerificationReport& report, const SpaceParams& space) {
  report.set("family", family_name(space));
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, BergmanDirichletParams>) {
          report.set("alpha", s.alpha);
          report.set("R", s.R);
        } else if constexpr (std::is_same_v<T, BargmannDirichletParams>) {
          report.set("theta", s.theta);
        }
        report.set("beta0", s.beta0);
        report.set("p", static_cast<std::int64_t>(s.p));
        report.set("m", static_cast<std::int64_t>(s.m));
      },
      space);
}

void describe_spec(VerificationReport& report, const TransformSpec& spec) {
  report.set("family", std::string(to_string(spec.family)));
  report.set("kind", std::string(to_string(spec.kind)));
  report.set("p", static_cast<std::int64_t>(spec.p));
  report.set("q", static_cast<std::int64_t>(spec.q));
  if (spec.family == Family::disk) {
    report.set("alpha", spec.params.alpha);
  } else {
    report.set("theta", spec.params.theta);
  }
  report.set("beta0", spec.params.beta0);
}

double space_radius_squared(const SpaceParams& space) {
  if (const auto* b = std::get_if<BergmanDirichletParams>(&space)) return b->R * b->R;
  return 1.0;
}

template <typename F>
VerificationReport timed(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report = body();
  const auto stop = std::chrono::steady_clock::now();
  report.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return report;
}

}  // namespace

void VerificationReport::set(std::string key, ParamValue value) {
  for (auto& [k, v] : parameters) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  parameters.emplace_back(std::move(key), std::move(value));
}

const ParamValue* VerificationReport::find(std::string_view key) const {
  for (const auto& [k, v] : parameters) {
    if (k == key) return &v;
  }
  return nullptr;
}

void VerificationReport::finalize() { passed = measured_error <= tolerance; }

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

complex SplitMix64::unit_square() {
  const double re = uniform(-1.0, 1.0);
  const double im = uniform(-1.0, 1.0);
  return {re, im};
}

int SplitMix64::integer(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(next() % span);
}

LaurentSeries random_series(SplitMix64& rng, int min_index, int max_index) {
  std::vector<complex> coefficients;
  for (int n = min_index; n <= max_index; ++n) coefficients.push_back(rng.unit_square());
  return LaurentSeries(min_index, std::move(coefficients));
}

double scaled_error(complex a, complex b) {
  const double diff = std::abs(a - b);
  const double scale = std::abs(b);
  return scale > 1.0 ? diff / scale : diff;
}

VerificationReport check_reproducing(const SpaceParams& space, const LaurentSeries& f,
                                     complex w, InnerProductPath path,
                                     std::optional<double> tolerance) {
  return timed([&] {
    validate(space);
    VerificationReport report;
    report.check_name = "reproducing";
    describe_space(report, space);
    report.set("path", std::string(path == InnerProductPath::coefficient ? "coefficient"
                                                                          : "quadrature"));
    report.set("w", w);
    report.set("degree", static_cast<std::int64_t>(f.max_index()));
    auto k_w = [&](complex z) { return kernel(z, w, space); };
    const complex expected = f(w);
    complex measured;
    if (path == InnerProductPath::coefficient) {
      report.tolerance = tolerance.value_or(1e-8);
      double radius;
      if (const auto* b = std::get_if<BargmannDirichletParams>(&space)) {
        radius = 8.0 / (b->theta * std::abs(w));
      } else {
        radius = 0.5 * space_radius_squared(space) / std::abs(w);
      }
      const LaurentSeries coefficients =
          circle_coefficients(k_w, radius, 256, f.min_index(), f.max_index());
      measured = dirichlet_inner_product(f, coefficients, space);
    } else {
      report.tolerance = tolerance.value_or(1e-6);
      if (std::visit([](const auto& s) { return s.m; }, space) != 0) {
        throw DomainError("check_reproducing: the quadrature path needs m = 0");
      }
      if (const auto* b = std::get_if<BergmanDirichletParams>(&space)) {
        measured = inner_product(f, k_w, build_disk_quadrature(b->measure(), 32, 256));
      } else if (const auto* g = std::get_if<BargmannDirichletParams>(&space)) {
        measured = inner_product(f, k_w, build_fock_quadrature(g->measure(), 32, 256));
      } else {
        complex sum(0.0);
        for (complex z : circle_points(256, 1.0)) sum += f(z) * std::conj(k_w(z));
        measured = sum / 256.0;
      }
    }
    report.measured_error = scaled_error(measured, expected);
    report.finalize();
    return report;
  });
}

VerificationReport check_orthonormality(const SpaceParams& space, int N, double tolerance) {
  return timed([&] {
    validate(space);
    if (N < 1) throw DomainError("check_orthonormality: N must be positive");
    VerificationReport report;
    report.check_name = "orthonormality";
    describe_space(report, space);
    report.set("N", static_cast<std::int64_t>(N));
    report.tolerance = tolerance;
    const int lo = min_index(space);
    std::vector<LaurentSeries> basis;
    for (int n = lo; n < lo + N; ++n) basis.push_back(basis_element(n, space));
    double worst = 0.0;
    for (int i = 0; i < N; ++i) {
      for (int j = i; j < N; ++j) {
        const complex g = dirichlet_inner_product_quadrature(basis[i], basis[j], space);
        worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
      }
    }
    report.measured_error = worst;
    report.finalize();
    return report;
  });
}

VerificationReport check_limit(LimitKind kind, complex xi, const LimitParams& params,
                               const std::vector<double>& sequence, double tolerance) {
  return timed([&] {
    if (sequence.empty()) throw DomainError("check_limit: empty sequence");
    for (std::size_t i = 1; i < sequence.size(); ++i) {
      const bool ok = kind == LimitKind::bargmann ? sequence[i] > sequence[i - 1]
                                                  : sequence[i] < sequence[i - 1];
      if (!ok) throw DomainError("check_limit: sequence must be strictly monotone");
    }
    VerificationReport report;
    report.check_name = kind == LimitKind::bargmann ? "limit_bargmann" : "limit_hardy";
    report.set("family", std::string("bergman"));
    report.set("limit_space", std::string(kind == LimitKind::bargmann ? "bargmann" : "hardy"));
    if (kind == LimitKind::bargmann) report.set("theta", params.theta);
    report.set("beta0", params.beta0);
    report.set("p", static_cast<std::int64_t>(params.p));
    report.set("m", static_cast<std::int64_t>(params.m));
    report.set("xi", xi);
    report.tolerance = tolerance;

    complex target;
    if (kind == LimitKind::bargmann) {
      target = bargmann_kernel(xi, {params.theta, params.beta0, params.p, params.m});
    } else {
      target = hardy_kernel(xi, {params.beta0, params.p, params.m});
    }
    report.set("target", target);
    std::vector<double> errors;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
      BergmanDirichletParams b;
      b.beta0 = params.beta0;
      b.p = params.p;
      b.m = params.m;
      if (kind == LimitKind::bargmann) {
        b.R = sequence[i];
        b.alpha = params.theta * b.R * b.R;
      } else {
        b.R = 1.0;
        b.alpha = sequence[i];
      }
      errors.push_back(scaled_error(bergman_kernel(xi, b), target));
      report.set((kind == LimitKind::bargmann ? "R_" : "alpha_") + std::to_string(i),
                 sequence[i]);
      report.set("error_" + std::to_string(i), errors.back());
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < errors.size(); ++i) decreasing &= errors[i] < errors[i - 1];
    report.set("strictly_decreasing", decreasing);
    report.measured_error = decreasing ? errors.back() : kInf;
    report.finalize();
    return report;
  });
}

VerificationReport check_kernel_series(const SpaceParams& space,
                                       const std::vector<complex>& points, double tolerance) {
  return timed([&] {
    VerificationReport report;
    report.check_name = "kernel_closed_vs_series";
    describe_space(report, space);
    report.set("points", static_cast<std::int64_t>(points.size()));
    report.tolerance = tolerance;
    double worst = 0.0;
    for (complex xi : points) {
      worst = std::max(worst, scaled_error(kernel(xi, space), kernel_series(xi, space)));
    }
    report.measured_error = worst;
    report.finalize();
    return report;
  });
}

VerificationReport check_identity(IdentityKind kind, int p, int q, const FamilyParams& params,
                                  const std::vector<complex>& points, IdentityMode mode,
                                  double tolerance) {
  return timed([&] {
    VerificationReport report;
    report.check_name = "identity_" + std::string(to_string(kind));
    const Family family = identity_family(kind);
    report.set("family", std::string(to_string(family)));
    if (family == Family::disk) {
      report.set("alpha", params.alpha);
    } else {
      report.set("theta", params.theta);
    }
    report.set("beta0", params.beta0);
    report.set("p", static_cast<std::int64_t>(p));
    report.set("q", static_cast<std::int64_t>(q));
    report.set("mode", std::string(mode == IdentityMode::detect ? "detect" : "assert"));

    double worst = 0.0;
    for (complex xi : points) {
      const IdentitySides sides = series_identity(kind, xi, p, q, params);
      const double err = scaled_error(sides.lhs, sides.rhs);
      if (err >= worst) {
        worst = err;
        report.set("xi", xi);
        report.set("lhs", sides.lhs);
        report.set("rhs", sides.rhs);
      }
    }
    report.set("discrepancy", worst);
    const bool holds = worst <= tolerance;
    report.set("identity_holds", holds);

    if (mode == IdentityMode::assert_equal) {
      report.tolerance = tolerance;
      report.measured_error = worst;
    } else {
      // Independent verdict from Taylor coefficients read off |xi| = 0.5.
      auto lhs = [&](complex xi) { return series_identity(kind, xi, p, q, params).lhs; };
      auto rhs = [&](complex xi) { return series_identity(kind, xi, p, q, params).rhs; };
      const LaurentSeries a = circle_coefficients(lhs, 0.5, 64, 0, 15);
      const LaurentSeries b = circle_coefficients(rhs, 0.5, 64, 0, 15);
      double scale = 0.0;
      double gap = 0.0;
      for (int n = 0; n <= 15; ++n) {
        const double weight = std::pow(0.5, n);
        scale = std::max(scale, std::abs(b[n]) * weight);
        gap = std::max(gap, std::abs(a[n] - b[n]) * weight);
      }
      const bool coefficients_agree = gap <= tolerance * std::max(1.0, scale);
      report.set("coefficients_agree", coefficients_agree);
      report.tolerance = 0.5;
      report.measured_error = holds == coefficients_agree ? 0.0 : 1.0;
    }
    report.finalize();
    return report;
  });
}

VerificationReport check_isometry_coeff(const TransformSpec& spec,
                                        const std::vector<std::vector<complex>>& vectors,
                                        double tolerance) {
  return timed([&] {
    VerificationReport report;
    report.check_name = "isometry_coefficient";
    describe_spec(report, spec);
    report.set("vectors", static_cast<std::int64_t>(vectors.size()));
    report.tolerance = tolerance;
    const SpaceParams src = source_space(spec);
    const SpaceParams tgt = target_space(spec);
    double worst = 0.0;
    for (const auto& a : vectors) {
      const LaurentSeries f = from_basis_coefficients(a, spec.family, spec.p, spec.params);
      const double before = dirichlet_norm(f, src);
      const double after = dirichlet_norm(apply_transform_coeff(spec, f), tgt);
      worst = std::max(worst, std::abs(after - before) / std::max(before, 1e-300));
    }
    report.measured_error = worst;
    report.finalize();
    return report;
  });
}

VerificationReport check_isometry_quadrature(const TransformSpec& spec,
                                             const std::vector<std::vector<complex>>& vectors,
                                             double tolerance) {
  return timed([&] {
    VerificationReport report;
    report.check_name = "isometry_quadrature";
    describe_spec(report, spec);
    report.set("vectors", static_cast<std::int64_t>(vectors.size()));
    report.tolerance = tolerance;
    const SpaceParams src = source_space(spec);
    const SpaceParams tgt = target_space(spec);
    const QuadratureRule rule = source_quadrature(spec, 24, 128);
    constexpr int kPoints = 64;
    double worst = 0.0;
    for (const auto& a : vectors) {
      const LaurentSeries f = from_basis_coefficients(a, spec.family, spec.p, spec.params);
      auto tf = [&](complex z) { return apply_transform_quadrature(spec, f, z, rule); };
      // Transforms shift basis indices by at most one; reading coefficients beyond the
      // image support only adds noise weighted by fast-growing Fock norms.
      const int hi = std::max(f.max_index() + std::abs(spec.p - spec.q) + 1, 0);
      const double radius = spec.family == Family::disk
                                ? 0.7
                                : std::max(1.0, std::sqrt(hi / spec.params.theta));
      const LaurentSeries image = circle_coefficients(tf, radius, kPoints, -spec.q, hi);
      const double before = dirichlet_norm(f, src);
      const double after = dirichlet_norm(image, tgt);
      worst = std::max(worst, std::abs(after - before) / std::max(before, 1e-300));
    }
    report.measured_error = worst;
    report.finalize();
    return report;
  });
}

VerificationReport check_transform_kernel(
    const TransformSpec& spec, const std::vector<std::pair<complex, complex>>& points,
    double tolerance) {
  return timed([&] {
    VerificationReport report;
    report.check_name = "transform_kernel_vs_basis_sum";
    describe_spec(report, spec);
    report.set("points", static_cast<std::int64_t>(points.size()));
    report.tolerance = tolerance;
    double worst = 0.0;
    for (const auto& [z, w] : points) {
      worst = std::max(worst, scaled_error(transform_kernel(spec, z, w),
                                           basis_sum_kernel(spec, z, w)));
    }
    report.measured_error = worst;
    report.finalize();
    return report;
  });
}

VerificationReport check_involution(const TransformSpec& spec,
                                    const std::vector<std::vector<complex>>& vectors) {
  return timed([&] {
    VerificationReport report;
    report.check_name = "involution";
    describe_spec(report, spec);
    report.set("vectors", static_cast<std::int64_t>(vectors.size()));
    report.tolerance = 0.0;
    double worst = 0.0;
    for (auto a : vectors) {
      while (!a.empty() && a.back() == complex(0.0)) a.pop_back();
      const std::vector<complex> twice =
          apply_transform_basis(spec, apply_transform_basis(spec, a));
      if (twice.size() != a.size()) {
        worst = kInf;
        continue;
      }
      for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(twice[k] - a[k]));
    }
    report.measured_error = worst;
    report.finalize();
    return report;
  });
}

const std::vector<std::string>& suite_groups() {
  static const std::vector<std::string> groups = {
      "norms",  "kernels",    "m0_forms",   "reproducing", "orthonormality",
      "limits", "identities", "transforms"};
  return groups;
}

namespace {

using Check = std::function<VerificationReport()>;

std::vector<complex> random_points(SplitMix64& rng, int count, double max_modulus) {
  std::vector<complex> points;
  while (static_cast<int>(points.size()) < count) {
    const complex z = max_modulus * rng.unit_square();
    if (std::abs(z) <= max_modulus && std::abs(z) >= 0.05 * max_modulus) points.push_back(z);
  }
  return points;
}

std::vector<complex> random_basis_vector(SplitMix64& rng, int length,
                                         std::optional<int> parity) {
  std::vector<complex> a(length);
  for (int k = 0; k < length; ++k) {
    if (!parity || k % 2 == *parity) a[k] = rng.unit_square();
  }
  return a;
}

std::optional<int> source_parity(TransformKind kind) {
  switch (kind) {
    case TransformKind::even_even:
    case TransformKind::even_odd: return 0;
    case TransformKind::odd_odd: return 1;
    default: return std::nullopt;
  }
}

void add_norm_checks(std::vector<Check>& checks) {
  for (double alpha : {0.5, 2.0}) {
    for (double beta0 : {0.0, -0.5}) {
      for (int p : {0, 1, 3}) {
        for (int m : {0, 1, 2}) {
          checks.push_back([=] {
            return timed([&] {
              const BergmanDirichletParams params{alpha, beta0, p, 1.0, m};
              VerificationReport report;
              report.check_name = "monomial_norms";
              describe_space(report, params);
              report.tolerance = 1e-8;
              double worst = 0.0;
              for (int n = params.min_index(); n <= 10; ++n) {
                const LaurentSeries zn = LaurentSeries::monomial(n);
                const double closed = std::pow(monomial_norm_bergman(n, params), 2);
                const double quad = dirichlet_inner_product_quadrature(zn, zn, params).real();
                worst = std::max(worst, std::abs(quad - closed) / closed);
              }
              report.measured_error = worst;
              report.finalize();
              return report;
            });
          });
        }
      }
    }
  }
}

void add_kernel_checks(std::vector<Check>& checks, SplitMix64& rng) {
  const std::vector<BergmanDirichletParams> bergman = {
      {1.5, -0.5, 2, 1.0, 1}, {0.5, -0.25, 0, 1.3, 2}, {2.0, 0.0, 3, 0.8, 0}};
  for (const auto& b : bergman) {
    const auto points = random_points(rng, 5, 0.8 * b.R * b.R);
    checks.push_back([=] { return check_kernel_series(b, points); });
  }
  const std::vector<BargmannDirichletParams> bargmann = {
      {2.0, -0.5, 1, 0}, {1.5, -0.25, 3, 1}, {0.7, 0.0, 0, 2}};
  for (const auto& b : bargmann) {
    const auto points = random_points(rng, 5, 2.0);
    checks.push_back([=] { return check_kernel_series(b, points); });
  }
  const std::vector<HardyDirichletParams> hardy = {{0.0, 0, 2}, {-0.5, 3, 1}, {-0.25, 1, 0}};
  for (const auto& h : hardy) {
    const auto points = random_points(rng, 5, 0.8);
    checks.push_back([=] { return check_kernel_series(h, points); });
  }
}

void add_m0_form_checks(std::vector<Check>& checks, SplitMix64& rng) {
  const std::vector<BergmanDirichletParams> grid = {
      {0.5, -0.3, 1, 1.0, 0}, {2.0, -0.5, 2, 1.0, 0}, {1.0, -0.7, 0, 1.5, 0}};
  for (const auto& b : grid) {
    const auto points = random_points(rng, 5, 0.8 * b.R * b.R);
    checks.push_back([=] {
      return timed([&] {
        VerificationReport report;
        report.check_name = "bergman_m0_forms";
        describe_space(report, b);
        report.tolerance = 1e-9;
        double worst = 0.0;
        for (complex xi : points) {
          const BergmanM0Forms forms = bergman_kernel_m0_forms(xi, b);
          worst = std::max(worst, scaled_error(forms.euler_transformed, forms.hypergeometric));
          worst = std::max(worst, scaled_error(*forms.binomial_sum, forms.hypergeometric));
          worst = std::max(worst, scaled_error(*forms.binomial_sum, forms.euler_transformed));
        }
        report.measured_error = worst;
        report.finalize();
        return report;
      });
    });
  }
}

void add_reproducing_checks(std::vector<Check>& checks, SplitMix64& rng) {
  const std::vector<SpaceParams> spaces = {
      BergmanDirichletParams{0.5, -0.25, 0, 1.0, 0}, BergmanDirichletParams{1.5, -0.5, 2, 1.0, 1},
      BergmanDirichletParams{2.0, 0.0, 1, 1.4, 2},   BergmanDirichletParams{0.5, -0.5, 2, 1.0, 0},
      BargmannDirichletParams{1.0, 0.0, 0, 0},       BargmannDirichletParams{2.0, -0.5, 2, 1},
      BargmannDirichletParams{1.5, -0.25, 1, 2},     BargmannDirichletParams{1.0, -0.5, 2, 0},
      HardyDirichletParams{0.0, 0, 0},               HardyDirichletParams{-0.5, 3, 1},
      HardyDirichletParams{-0.25, 1, 2},             HardyDirichletParams{0.0, 2, 0}};
  for (const auto& space : spaces) {
    const int lo = min_index(space);
    const LaurentSeries f = random_series(rng, lo, lo + rng.integer(5, 15));
    const double reach = std::holds_alternative<BergmanDirichletParams>(space)
                             ? 0.8 * std::get<BergmanDirichletParams>(space).R
                             : (std::holds_alternative<HardyDirichletParams>(space) ? 0.8 : 1.0);
    const complex w = random_points(rng, 1, reach).front();
    checks.push_back([=] { return check_reproducing(space, f, w); });
    if (std::visit([](const auto& s) { return s.m; }, space) == 0) {
      checks.push_back(
          [=] { return check_reproducing(space, f, w, InnerProductPath::quadrature); });
    }
  }
}

void add_orthonormality_checks(std::vector<Check>& checks) {
  checks.push_back([] { return check_orthonormality(BergmanDirichletParams{0.5, -0.25, 1, 1.0, 0}, 12); });
  checks.push_back([] { return check_orthonormality(BargmannDirichletParams{2.0, -0.5, 1, 0}, 12); });
  checks.push_back([] { return check_orthonormality(BergmanDirichletParams{2.0, -0.5, 1, 1.2, 2}, 8); });
  checks.push_back([] { return check_orthonormality(HardyDirichletParams{-0.5, 2, 1}, 8); });
}

void add_limit_checks(std::vector<Check>& checks) {
  checks.push_back([] {
    return check_limit(LimitKind::bargmann, 0.5, {1.0, 0.0, 0, 0}, {5, 10, 20, 40, 100});
  });
  checks.push_back([] {
    return check_limit(LimitKind::bargmann, {0.5, 0.2}, {1.0, -0.5, 2, 1}, {5, 10, 20, 40, 100});
  });
  checks.push_back([] {
    return check_limit(LimitKind::hardy, 0.5, {1.0, 0.0, 1, 0}, {-0.9, -0.99, -0.999});
  });
  checks.push_back([] {
    return check_limit(LimitKind::hardy, {0.3, -0.4}, {1.0, -0.5, 2, 1}, {-0.9, -0.99, -0.999});
  });
}

void add_identity_checks(std::vector<Check>& checks, SplitMix64& rng) {
  const FamilyParams disk{0.5, 1.0, -0.25};
  const FamilyParams fock{0.0, 1.5, -0.25};
  const auto disk_points = random_points(rng, 5, 0.8);
  const auto fock_points = random_points(rng, 5, 2.0);
  for (IdentityKind kind : {IdentityKind::disk_full, IdentityKind::disk_even, IdentityKind::disk_odd,
                            IdentityKind::disk_even_odd, IdentityKind::fock_full, IdentityKind::fock_even,
                            IdentityKind::fock_odd, IdentityKind::fock_even_odd}) {
    const bool is_disk = identity_family(kind) == Family::disk;
    // The even-odd sums are not hypergeometric, and the odd Fock sum has
    // shifted parameters: these are reported, not asserted.
    const bool detect = kind == IdentityKind::disk_even_odd || kind == IdentityKind::fock_odd ||
                        kind == IdentityKind::fock_even_odd;
    for (int p = 0; p <= 2; ++p) {
      for (int q = 0; q <= 2; ++q) {
        checks.push_back([=] {
          return check_identity(kind, p, q, is_disk ? disk : fock,
                                is_disk ? disk_points : fock_points,
                                detect ? IdentityMode::detect : IdentityMode::assert_equal);
        });
      }
    }
  }
}

void add_transform_checks(std::vector<Check>& checks, SplitMix64& rng) {
  const FamilyParams params{0.5, 1.5, -0.25};
  for (Family family : {Family::disk, Family::fock}) {
    for (TransformKind kind : {TransformKind::full, TransformKind::even_even,
                               TransformKind::odd_odd, TransformKind::even_odd,
                               TransformKind::involution}) {
      TransformSpec spec{family, kind, 1, kind == TransformKind::involution ? 1 : 2, params};
      std::vector<std::vector<complex>> vectors;
      for (int i = 0; i < 20; ++i) {
        vectors.push_back(random_basis_vector(rng, rng.integer(1, 21), source_parity(kind)));
      }
      checks.push_back([=] { return check_isometry_coeff(spec, vectors); });
      const std::vector<std::vector<complex>> few(vectors.begin(), vectors.begin() + 2);
      checks.push_back([=] { return check_isometry_quadrature(spec, few); });
      std::vector<std::pair<complex, complex>> points;
      const double reach = family == Family::disk ? std::sqrt(0.8) : 1.2;
      for (int i = 0; i < 5; ++i) {
        points.emplace_back(random_points(rng, 1, reach).front(),
                            random_points(rng, 1, reach).front());
      }
      checks.push_back([=] { return check_transform_kernel(spec, points); });
      if (kind == TransformKind::involution) {
        checks.push_back([=] { return check_involution(spec, vectors); });
      }
    }
  }
}

}  // namespace

std::vector<VerificationReport> run_suite(const SuiteConfig& config) {
  SplitMix64 rng(config.seed);
  std::vector<Check> checks;
  for (const std::string& group : config.groups) {
    if (group == "norms") add_norm_checks(checks);
    else if (group == "kernels") add_kernel_checks(checks, rng);
    else if (group == "m0_forms") add_m0_form_checks(checks, rng);
    else if (group == "reproducing") add_reproducing_checks(checks, rng);
    else if (group == "orthonormality") add_orthonormality_checks(checks);
    else if (group == "limits") add_limit_checks(checks);
    else if (group == "identities") add_identity_checks(checks, rng);
    else if (group == "transforms") add_transform_checks(checks, rng);
    else throw DomainError("run_suite: unknown group '" + group + "'");
  }

  std::vector<VerificationReport> reports;
  reports.reserve(checks.size());
  for (const Check& check : checks) {
    VerificationReport report;
    try {
      report = check();
    } catch (const std::exception& e) {
      report.check_name = report.check_name.empty() ? "check" : report.check_name;
      report.set("exception", std::string(e.what()));
      report.measured_error = kInf;
      report.tolerance = 0.0;
    }
    report.set("seed", static_cast<std::int64_t>(config.seed));
    if (config.tolerance) report.tolerance = *config.tolerance;
    report.finalize();
    reports.push_back(std::move(report));
  }
  return reports;
}

std::string format_report_table(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-32s %-10s %-12s %-12s %s\n", "check", "family",
                "error", "tolerance", "status");
  out << line;
  for (const auto& r : reports) {
    std::string family = "-";
    if (const ParamValue* v = r.find("family")) {
      if (const auto* s = std::get_if<std::string>(v)) family = *s;
    }
    std::snprintf(line, sizeof line, "%-32s %-10s %-12.3e %-12.3e %s\n", r.check_name.c_str(),
                  family.c_str(), r.measured_error, r.tolerance, r.passed ? "PASS" : "FAIL");
    out << line;
  }
  return out.str();
}

}  // namespace rkhs
