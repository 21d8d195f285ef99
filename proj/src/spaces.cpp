#include "rkhs/spaces.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace rkhs {
namespace {

// log(n! / (n-k)!) for n >= k >= 0.
double log_falling(int n, int k) {
  double sum = 0.0;
  for (int j = n - k + 1; j <= n; ++j) sum += std::log(static_cast<double>(j));
  return sum;
}

// log((m-n-1)! / (-n-1)!) for n <= -1: the m-th derivative factor of z^n.
double log_negative_falling(int n, int m) { return log_falling(m - n - 1, m); }

void require_index(int n, int lowest) {
  if (n < lowest) {
    std::ostringstream msg;
    msg << "monomial index " << n << " is below the admissible minimum " << lowest;
    throw IndexError(msg.str());
  }
}

void require_support(const LaurentSeries& f, int lowest) {
  for (int n = f.min_index(); n < lowest && n <= f.max_index(); ++n) {
    if (f[n] != complex(0.0)) require_index(n, lowest);
  }
}

void validate_common(double beta0, int p, int m, const char* who) {
  if (!(beta0 > -1.0 && beta0 <= 0.0)) {
    throw DomainError(std::string(who) + ": beta0 must lie in (-1, 0]");
  }
  if (p < 0) throw DomainError(std::string(who) + ": p must be non-negative");
  if (m < 0) throw DomainError(std::string(who) + ": m must be non-negative");
}

}  // namespace

void BergmanDirichletParams::validate() const {
  validate_common(beta0, p, m, "Bergman-Dirichlet");
  if (!(alpha > -1.0)) throw DomainError("Bergman-Dirichlet: alpha must be > -1");
  if (!(R > 0.0)) throw DomainError("Bergman-Dirichlet: R must be positive");
}

void BargmannDirichletParams::validate() const {
  validate_common(beta0, p, m, "Bargmann-Dirichlet");
  if (!(theta > 0.0)) throw DomainError("Bargmann-Dirichlet: theta must be positive");
}

void HardyDirichletParams::validate() const {
  validate_common(beta0, p, m, "Hardy-Dirichlet");
  if (!(s > 0.0)) throw DomainError("Hardy-Dirichlet: s must be positive");
}

std::string family_name(const SpaceParams& space) {
  struct {
    std::string operator()(const BergmanDirichletParams&) const { return "bergman"; }
    std::string operator()(const BargmannDirichletParams&) const { return "bargmann"; }
    std::string operator()(const HardyDirichletParams&) const { return "hardy"; }
  } visitor;
  return std::visit(visitor, space);
}

int min_index(const SpaceParams& space) {
  return std::visit([](const auto& s) { return s.min_index(); }, space);
}

void validate(const SpaceParams& space) {
  std::visit([](const auto& s) { s.validate(); }, space);
}

std::pair<LaurentSeries, LaurentSeries> split_f1_f2(const LaurentSeries& f, int m,
                                                    int p) {
  require_support(f, std::min(0, m - p));
  LaurentSeries f1 = f.slice(0, m - 1);
  LaurentSeries f2 = f.slice(std::min(f.min_index(), m), std::max(f.max_index(), m - 1));
  for (int n = 0; n < m; ++n) {
    if (n >= f2.min_index() && n <= f2.max_index()) f2.set(n, 0.0);
  }
  return {std::move(f1), std::move(f2)};
}

double log_monomial_norm_sq(int n, const BergmanDirichletParams& params) {
  params.validate();
  const int m = params.m;
  const int p = params.p;
  require_index(n, params.min_index());
  const double log_r2 = 2.0 * std::log(params.R);
  const double beta = params.beta();
  const double alpha = params.alpha;
  if (n >= 0 && n < m) {
    return n * log_r2 + log_pochhammer_ratio(beta + 1.0, alpha + beta + 2.0, n);
  }
  if (n >= m) {
    return (n - m) * log_r2 +
           log_pochhammer_ratio(beta + 1.0, alpha + beta + 2.0, n - m) +
           2.0 * log_falling(n, m);
  }
  const double b0 = params.beta0;
  return (n - m) * log_r2 +
         log_pochhammer_ratio(b0 + 1.0, alpha + b0 + 2.0, n - m + p) -
         log_pochhammer_ratio(b0 + 1.0, alpha + b0 + 2.0, p) +
         2.0 * log_negative_falling(n, m);
}

double log_monomial_norm_sq(int n, const BargmannDirichletParams& params) {
  params.validate();
  const int m = params.m;
  const int p = params.p;
  require_index(n, params.min_index());
  const double log_theta = std::log(params.theta);
  const double beta = params.beta();
  if (n >= 0 && n < m) {
    return log_pochhammer(beta + 1.0, n).log_abs - n * log_theta;
  }
  if (n >= m) {
    return 2.0 * log_falling(n, m) + log_pochhammer(beta + 1.0, n - m).log_abs -
           (n - m) * log_theta;
  }
  const double b0 = params.beta0;
  return 2.0 * log_negative_falling(n, m) +
         log_pochhammer(b0 + 1.0, n - m + p).log_abs -
         log_pochhammer(b0 + 1.0, p).log_abs - (n - m) * log_theta;
}

double log_monomial_norm_sq(int n, const HardyDirichletParams& params) {
  params.validate();
  if (params.s != 2.0) {
    throw UnsupportedError("Hardy-Dirichlet norms exist only for s = 2");
  }
  require_index(n, params.min_index());
  const int m = params.m;
  if (n >= 0 && n < m) return 0.0;
  if (n >= m) return 2.0 * log_falling(n, m);
  return 2.0 * log_negative_falling(n, m);
}

double log_monomial_norm_sq(int n, const SpaceParams& space) {
  return std::visit([n](const auto& s) { return log_monomial_norm_sq(n, s); }, space);
}

double monomial_norm_bergman(int n, const BergmanDirichletParams& params) {
  return std::exp(0.5 * log_monomial_norm_sq(n, params));
}

double monomial_norm_bargmann(int n, const BargmannDirichletParams& params) {
  return std::exp(0.5 * log_monomial_norm_sq(n, params));
}

double monomial_norm_hardy(int n, const HardyDirichletParams& params) {
  return std::exp(0.5 * log_monomial_norm_sq(n, params));
}

double monomial_norm(int n, const SpaceParams& space) {
  return std::exp(0.5 * log_monomial_norm_sq(n, space));
}

int eta(double s, double beta) {
  if (!(s > 0.0)) throw DomainError("eta: s must be positive");
  if (!(beta > -1.0)) throw DomainError("eta: beta must be > -1");
  const double x = 2.0 * (beta + 1.0) / s;
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= 1e-12 * std::max(1.0, x)) {
    return static_cast<int>(nearest) - 1;
  }
  return static_cast<int>(std::floor(x));
}

complex dirichlet_inner_product(const LaurentSeries& f, const LaurentSeries& g,
                                const SpaceParams& space) {
  validate(space);
  const int lowest = min_index(space);
  require_support(f, lowest);
  require_support(g, lowest);
  const int lo = std::max({f.min_index(), g.min_index(), lowest});
  const int hi = std::min(f.max_index(), g.max_index());
  complex sum(0.0);
  for (int n = lo; n <= hi; ++n) {
    const complex term = f[n] * std::conj(g[n]);
    if (term == complex(0.0)) continue;
    sum += term * std::exp(log_monomial_norm_sq(n, space));
  }
  return sum;
}

double dirichlet_norm(const LaurentSeries& f, const SpaceParams& space) {
  return std::sqrt(dirichlet_inner_product(f, f, space).real());
}

complex circle_inner_product(const LaurentSeries& f, const LaurentSeries& g,
                             int n_points, double radius) {
  if (n_points < 1) throw DomainError("circle_inner_product: n_points must be >= 1");
  complex sum(0.0);
  for (int j = 0; j < n_points; ++j) {
    const complex z = std::polar(radius, 2.0 * std::numbers::pi * j / n_points);
    sum += f(z) * std::conj(g(z));
  }
  return sum / static_cast<double>(n_points);
}

complex dirichlet_inner_product_quadrature(const LaurentSeries& f,
                                           const LaurentSeries& g,
                                           const SpaceParams& space, int n_radial,
                                           int n_angular) {
  validate(space);
  const int m = std::visit([](const auto& s) { return s.m; }, space);
  const int p = std::visit([](const auto& s) { return s.p; }, space);
  auto [f1, f2] = split_f1_f2(f, m, p);
  auto [g1, g2] = split_f1_f2(g, m, p);
  const LaurentSeries f2m = f2.derivative(m);
  const LaurentSeries g2m = g2.derivative(m);

  if (const auto* h = std::get_if<HardyDirichletParams>(&space)) {
    if (h->s != 2.0) throw UnsupportedError("Hardy inner product requires s = 2");
    return circle_inner_product(f1, g1, n_angular) +
           circle_inner_product(f2m, g2m, n_angular);
  }
  QuadratureRule rule;
  if (const auto* b = std::get_if<BergmanDirichletParams>(&space)) {
    rule = build_disk_quadrature(b->measure(), n_radial, n_angular);
  } else {
    rule = build_fock_quadrature(std::get<BargmannDirichletParams>(space).measure(),
                                 n_radial, n_angular);
  }
  return inner_product(f1, g1, rule) + inner_product(f2m, g2m, rule);
}

double radial_mean(const LaurentSeries& f, double r, double s, int n_points) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("radial_mean: r must lie in (0, 1)");
  if (!(s > 0.0)) throw DomainError("radial_mean: s must be positive");
  if (n_points <= 0) {
    const int span = f.empty() ? 1 : f.max_index() - f.min_index() + 1;
    n_points = std::max(256, 4 * span);
  }
  double sum = 0.0;
  for (int j = 0; j < n_points; ++j) {
    const complex z = std::polar(r, 2.0 * std::numbers::pi * j / n_points);
    sum += std::pow(std::abs(f(z)), s);
  }
  return std::pow(sum / n_points, 1.0 / s);
}

LaurentSeries basis_element(int n, const SpaceParams& space) {
  return LaurentSeries::monomial(n, 1.0 / monomial_norm(n, space));
}

}  // namespace rkhs
