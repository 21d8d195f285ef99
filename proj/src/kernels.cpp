#include "rkhs/kernels.hpp"

#include <cmath>
#include <sstream>

namespace rkhs {
namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

void require_nonzero_if_pole(complex xi, int p, int m, const char* who) {
  if (p > m && xi == complex(0.0)) {
    throw DomainError(std::string(who) + ": xi = 0 is a pole when p > m");
  }
}

void require_inside(complex xi, double radius_sq, const char* who) {
  if (!(std::abs(xi) < kRadiusGuard * radius_sq)) {
    std::ostringstream msg;
    msg << who << ": |xi| = " << std::abs(xi) << " outside the evaluation disk (guard "
        << kRadiusGuard << " * " << radius_sq << ")";
    throw DomainError(msg.str());
  }
}

// exp(log_coef) * xi^n without forming xi^n separately.
complex scaled_power(double log_coef, complex xi, int n) {
  const double log_mag = log_coef + n * std::log(std::abs(xi));
  return std::polar(std::exp(log_mag), n * std::arg(xi));
}

// sum_{n=lo}^{hi} xi^n / ||z^n||^2 for a generic space, skipping the zero
// xi^0 issue at xi = 0.
template <typename Params>
complex coefficient_sum(complex xi, const Params& params, int lo, int hi) {
  complex sum(0.0);
  for (int n = lo; n <= hi; ++n) {
    const double log_coef = -log_monomial_norm_sq(n, params);
    if (xi == complex(0.0)) {
      if (n == 0) sum += std::exp(log_coef);
      continue;
    }
    sum += scaled_power(log_coef, xi, n);
  }
  return sum;
}

template <typename Params>
complex coefficient_series(complex xi, const Params& params, int max_terms) {
  const int lo = params.min_index();
  complex principal(0.0);
  if (lo < 0) principal = coefficient_sum(xi, params, lo, -1);
  if (xi == complex(0.0)) return principal + coefficient_sum(xi, params, 0, 0);
  SeriesControls controls;
  controls.max_terms = max_terms;
  auto next = [&](int n) { return scaled_power(-log_monomial_norm_sq(n, params), xi, n); };
  const SeriesResult analytic = sum_series(next, controls);
  if (analytic.reason != Termination::converged) {
    throw ConvergenceError("kernel series did not converge");
  }
  return principal + analytic.value;
}

}  // namespace

complex bergman_principal_part(complex xi, const BergmanDirichletParams& params) {
  params.validate();
  const int m = params.m;
  const int p = params.p;
  if (p <= m) return 0.0;
  require_nonzero_if_pole(xi, p, m, "bergman_principal_part");
  const double alpha = params.alpha;
  const double beta = params.beta();
  const double R2 = params.R * params.R;
  const complex ratio = R2 / xi;
  complex sum(0.0);
  complex power = ratio;
  for (int k = 0; k <= p - m - 1; ++k) {
    const double fact = factorial(k) / factorial(m + k);
    sum += gamma_ratio(alpha + beta + 1.0 - m - k, alpha + beta + 2.0) *
           gamma_ratio(beta + 1.0, beta - m - k) * fact * fact * power;
    power *= ratio;
  }
  return ipow(R2, m) * sum;
}

complex bergman_kernel(complex xi, const BergmanDirichletParams& params) {
  params.validate();
  const double R2 = params.R * params.R;
  require_inside(xi, R2, "bergman_kernel");
  require_nonzero_if_pole(xi, params.p, params.m, "bergman_kernel");
  const int m = params.m;
  const double alpha = params.alpha;
  const double beta = params.beta();
  const complex u = xi / R2;

  complex polynomial(0.0);
  complex term(1.0);
  for (int n = 0; n < m; ++n) {
    polynomial += term;
    term *= (alpha + beta + 2.0 + n) / (beta + 1.0 + n) * u;
  }
  const double mf = factorial(m);
  const complex f_part =
      ipow(xi, m) / (mf * mf) *
      pfq({1.0, 1.0, 1.0, alpha + beta + 2.0}, {m + 1.0, m + 1.0, beta + 1.0}, u);
  return polynomial + f_part + bergman_principal_part(xi, params);
}

complex bergman_kernel_series(complex xi, const BergmanDirichletParams& params,
                              int truncation) {
  params.validate();
  if (!(std::abs(xi) < params.R * params.R)) {
    throw DomainError("bergman_kernel_series: |xi| must be below R^2");
  }
  require_nonzero_if_pole(xi, params.p, params.m, "bergman_kernel_series");
  if (truncation < params.min_index()) return 0.0;
  return coefficient_sum(xi, params, params.min_index(), truncation);
}

BergmanM0Forms bergman_kernel_m0_forms(complex xi, const BergmanDirichletParams& params) {
  params.validate();
  if (params.m != 0) throw DomainError("bergman_kernel_m0_forms: requires m = 0");
  const double R2 = params.R * params.R;
  require_inside(xi, R2, "bergman_kernel_m0_forms");
  if (xi == complex(0.0)) throw DomainError("bergman_kernel_m0_forms: requires xi != 0");
  const double alpha = params.alpha;
  const double b0 = params.beta0;
  const int p = params.p;
  const complex u = xi / R2;
  const complex prefactor = pochhammer_ratio(b0 + 1.0, alpha + b0 + 2.0, p) *
                            ipow(R2, p) / ipow(xi, p);

  BergmanM0Forms forms;
  forms.hypergeometric = prefactor * pfq({1.0, alpha + b0 + 2.0}, {b0 + 1.0}, u);

  const complex euler = std::pow(1.0 - u, -(alpha + 2.0));
  if (b0 == 0.0) {
    // 2F1(0, .; 1; u) = 1.
    forms.euler_transformed = prefactor * euler;
    return forms;
  }
  forms.euler_transformed =
      prefactor * euler * pfq({b0, -(alpha + 1.0)}, {b0 + 1.0}, u);

  // beta0 * sum_n (-1)^n / (n + beta0) * binom(alpha + 1, n) u^n
  complex binomial_term(1.0);  // (-1)^n binom(alpha+1, n) u^n
  auto next = [&](int n) {
    const complex current = binomial_term / (n + b0);
    binomial_term *= -(alpha + 1.0 - n) / (n + 1.0) * u;
    return current;
  };
  const SeriesResult sum = sum_series(next);
  if (sum.reason != Termination::converged) {
    throw ConvergenceError("bergman_kernel_m0_forms: binomial sum did not converge");
  }
  forms.binomial_sum = prefactor * b0 * euler * sum.value;
  return forms;
}

complex bargmann_principal_part(complex xi, const BargmannDirichletParams& params) {
  params.validate();
  const int m = params.m;
  const int p = params.p;
  if (p <= m) return 0.0;
  require_nonzero_if_pole(xi, p, m, "bargmann_principal_part");
  const double theta = params.theta;
  const double beta = params.beta();
  const complex inv = 1.0 / (theta * xi);
  complex sum(0.0);
  complex power = inv;
  for (int k = 0; k <= p - m - 1; ++k) {
    const double fact = factorial(k) / factorial(m + k);
    sum += fact * fact * gamma_ratio(beta + 1.0, beta - m - k) * power;
    power *= inv;
  }
  return sum / ipow(theta, m);
}

complex bargmann_kernel(complex xi, const BargmannDirichletParams& params) {
  params.validate();
  require_nonzero_if_pole(xi, params.p, params.m, "bargmann_kernel");
  const int m = params.m;
  const double beta = params.beta();
  const complex u = params.theta * xi;
  complex polynomial(0.0);
  complex term(1.0);
  for (int n = 0; n < m; ++n) {
    polynomial += term;
    term *= u / (beta + 1.0 + n);
  }
  const double mf = factorial(m);
  const complex f_part = ipow(xi, m) / (mf * mf) *
                         pfq({1.0, 1.0, 1.0}, {m + 1.0, m + 1.0, beta + 1.0}, u);
  return polynomial + f_part + bargmann_principal_part(xi, params);
}

complex bargmann_kernel_series(complex xi, const BargmannDirichletParams& params,
                               int max_terms) {
  params.validate();
  require_nonzero_if_pole(xi, params.p, params.m, "bargmann_kernel_series");
  return coefficient_series(xi, params, max_terms);
}

complex hardy_principal_part(complex xi, const HardyDirichletParams& params) {
  params.validate();
  const int m = params.m;
  const int p = params.p;
  if (p <= m) return 0.0;
  require_nonzero_if_pole(xi, p, m, "hardy_principal_part");
  const complex inv = 1.0 / xi;
  complex sum(0.0);
  complex power = inv;
  for (int k = 0; k <= p - m - 1; ++k) {
    const double fact = factorial(k) / factorial(m + k);
    sum += fact * fact * power;
    power *= inv;
  }
  return sum;
}

complex hardy_kernel(complex xi, const HardyDirichletParams& params) {
  params.validate();
  if (params.s != 2.0) throw UnsupportedError("hardy_kernel: requires s = 2");
  require_inside(xi, 1.0, "hardy_kernel");
  require_nonzero_if_pole(xi, params.p, params.m, "hardy_kernel");
  const int m = params.m;
  if (m == 0 && params.p == 0) return 1.0 / (1.0 - xi);
  complex polynomial(0.0);
  complex term(1.0);
  for (int n = 0; n < m; ++n) {
    polynomial += term;
    term *= xi;
  }
  const double mf = factorial(m);
  const complex f_part =
      ipow(xi, m) / (mf * mf) * pfq({1.0, 1.0, 1.0}, {m + 1.0, m + 1.0}, xi);
  return polynomial + f_part + hardy_principal_part(xi, params);
}

complex hardy_kernel_series(complex xi, const HardyDirichletParams& params,
                            int truncation) {
  params.validate();
  if (params.s != 2.0) throw UnsupportedError("hardy_kernel_series: requires s = 2");
  if (!(std::abs(xi) < 1.0)) throw DomainError("hardy_kernel_series: |xi| must be < 1");
  require_nonzero_if_pole(xi, params.p, params.m, "hardy_kernel_series");
  if (truncation < params.min_index()) return 0.0;
  return coefficient_sum(xi, params, params.min_index(), truncation);
}

complex kernel(complex xi, const SpaceParams& space) {
  struct {
    complex xi;
    complex operator()(const BergmanDirichletParams& p) const { return bergman_kernel(xi, p); }
    complex operator()(const BargmannDirichletParams& p) const { return bargmann_kernel(xi, p); }
    complex operator()(const HardyDirichletParams& p) const { return hardy_kernel(xi, p); }
  } visitor{xi};
  return std::visit(visitor, space);
}

complex kernel_series(complex xi, const SpaceParams& space) {
  struct {
    complex xi;
    complex operator()(const BergmanDirichletParams& p) const {
      return bergman_kernel_series(xi, p);
    }
    complex operator()(const BargmannDirichletParams& p) const {
      return bargmann_kernel_series(xi, p);
    }
    complex operator()(const HardyDirichletParams& p) const {
      return hardy_kernel_series(xi, p);
    }
  } visitor{xi};
  return std::visit(visitor, space);
}

}  // namespace rkhs
