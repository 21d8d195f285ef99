#include "rkhs/measures.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace rkhs {
namespace {

void require_rule_sizes(int n_radial, int n_angular) {
  if (n_radial < 2) throw DomainError("quadrature: n_radial must be >= 2");
  if (n_angular < 4) throw DomainError("quadrature: n_angular must be >= 4");
}

// Recurrence coefficients of the orthonormal polynomials of a probability
// measure: b_{k+1} p_{k+1} = (t - a_k) p_k - b_k p_{k-1}, p_0 = 1.
struct Recurrence {
  std::vector<double> a;  // size n + 1
  std::vector<double> b;  // size n + 1, b[0] unused
};

Recurrence jacobi_unit_recurrence(int n, double alpha, double beta) {
  // Jacobi weight (1-x)^alpha (1+x)^beta on [-1,1], mapped by t = (x+1)/2.
  Recurrence rec;
  rec.a.resize(n + 1);
  rec.b.assign(n + 1, 0.0);
  const double ab = alpha + beta;
  for (int k = 0; k <= n; ++k) {
    double diag;
    if (k == 0) {
      diag = (beta - alpha) / (ab + 2.0);
    } else {
      const double s = 2.0 * k + ab;
      diag = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    }
    rec.a[k] = 0.5 * (diag + 1.0);
    if (k >= 1) {
      double off2;
      if (k == 1) {
        off2 = 4.0 * (1.0 + alpha) * (1.0 + beta) /
               ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
      } else {
        const double s = 2.0 * k + ab;
        off2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
               (s * s * (s + 1.0) * (s - 1.0));
      }
      rec.b[k] = 0.5 * std::sqrt(off2);
    }
  }
  return rec;
}

Recurrence laguerre_recurrence(int n, double b) {
  Recurrence rec;
  rec.a.resize(n + 1);
  rec.b.assign(n + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    rec.a[k] = 2.0 * k + b + 1.0;
    if (k >= 1) rec.b[k] = std::sqrt(k * (k + b));
  }
  return rec;
}

// Gauss nodes from the n x n Jacobi matrix, polished by Newton on p_n, with
// Christoffel weights.
void gauss_from_recurrence(int n, const Recurrence& rec, double lower,
                           std::vector<double>& nodes,
                           std::vector<double>& weights) {
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n - 1);
  for (int k = 0; k < n; ++k) diag[k] = rec.a[k];
  for (int k = 1; k < n; ++k) sub[k - 1] = rec.b[k];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("quadrature: tridiagonal eigensolver failed");
  }

  struct Evaluation {
    double p = 0.0;
    double dp = 0.0;
    double christoffel = 0.0;
  };
  // p_n, p_n' and sum_{k<n} p_k^2 at t by the three-term recurrence.
  auto evaluate = [&](double t) {
    Evaluation e;
    double p_prev = 0.0, p = 1.0, dp_prev = 0.0, dp = 0.0;
    e.christoffel = 1.0;
    for (int k = 0; k < n; ++k) {
      const double p_next = ((t - rec.a[k]) * p - rec.b[k] * p_prev) / rec.b[k + 1];
      const double dp_next =
          ((t - rec.a[k]) * dp + p - rec.b[k] * dp_prev) / rec.b[k + 1];
      p_prev = p;
      p = p_next;
      dp_prev = dp;
      dp = dp_next;
      if (k + 1 < n) e.christoffel += p * p;
    }
    e.p = p;
    e.dp = dp;
    return e;
  };

  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = solver.eigenvalues()[i];
    for (int iter = 0; iter < 3; ++iter) {
      const Evaluation e = evaluate(t);
      if (e.dp == 0.0 || !std::isfinite(e.p / e.dp)) break;
      const double step = e.p / e.dp;
      if (!(t - step > lower)) break;
      t -= step;
      if (std::abs(step) <= 1e-15 * std::abs(t)) break;
    }
    const double christoffel = evaluate(t).christoffel;
    if (!std::isfinite(christoffel) || christoffel <= 0.0) {
      throw ConvergenceError("quadrature: Christoffel weight overflowed");
    }
    nodes[i] = t;
    weights[i] = 1.0 / christoffel;
  }
  for (int i = 1; i < n; ++i) {
    if (!(nodes[i] > nodes[i - 1])) {
      throw ConvergenceError("quadrature: nodes are not strictly increasing");
    }
  }
}

}  // namespace

void DiskMeasureParams::validate() const {
  if (!(alpha > -1.0)) throw DomainError("disk measure: alpha must be > -1");
  if (!(beta0 > -1.0 && beta0 <= 0.0)) {
    throw DomainError("disk measure: beta0 must lie in (-1, 0]");
  }
  if (p < 0) throw DomainError("disk measure: p must be non-negative");
  if (!(R > 0.0)) throw DomainError("disk measure: R must be positive");
}

void FockMeasureParams::validate() const {
  if (!(theta > 0.0)) throw DomainError("Fock measure: theta must be positive");
  if (!(beta0 > -1.0 && beta0 <= 0.0)) {
    throw DomainError("Fock measure: beta0 must lie in (-1, 0]");
  }
  if (p < 0) throw DomainError("Fock measure: p must be non-negative");
}

double disk_density(complex z, const DiskMeasureParams& params) {
  params.validate();
  const double r2 = std::norm(z);
  const double R2 = params.R * params.R;
  if (r2 >= R2) throw DomainError("disk_density: |z| >= R is outside the support");
  const double b = params.beta();
  if (r2 == 0.0 && b < 0.0) throw DomainError("disk_density: singular at z = 0");
  const double a = params.alpha;
  // |z|^{2b} (R^2-|z|^2)^a / R^{2(a+b+1)} = (t^b (1-t)^a) / R^2 with t = r2/R2.
  const double t = r2 / R2;
  return std::pow(t, b) * std::pow(1.0 - t, a) / (R2 * beta(a + 1.0, b + 1.0));
}

double fock_density(complex z, const FockMeasureParams& params) {
  params.validate();
  const double r2 = std::norm(z);
  const double b = params.beta();
  if (r2 == 0.0 && b < 0.0) throw DomainError("fock_density: singular at z = 0");
  const double theta = params.theta;
  return std::pow(theta, b + 1.0) / gamma(b + 1.0) * std::pow(r2, b) *
         std::exp(-theta * r2);
}

void gauss_jacobi_unit(int n, double a, double b, std::vector<double>& nodes,
                       std::vector<double>& weights) {
  if (n < 1) throw DomainError("gauss_jacobi_unit: n must be >= 1");
  if (!(a > -1.0 && b > -1.0)) throw DomainError("gauss_jacobi_unit: a, b must be > -1");
  if (n == 1) {
    nodes = {(b + 1.0) / (a + b + 2.0)};
    weights = {1.0};
    return;
  }
  gauss_from_recurrence(n, jacobi_unit_recurrence(n, a, b), 0.0, nodes, weights);
}

void gauss_laguerre(int n, double b, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  if (n < 1) throw DomainError("gauss_laguerre: n must be >= 1");
  if (!(b > -1.0)) throw DomainError("gauss_laguerre: b must be > -1");
  if (n == 1) {
    nodes = {b + 1.0};
    weights = {1.0};
    return;
  }
  gauss_from_recurrence(n, laguerre_recurrence(n, b), 0.0, nodes, weights);
}

QuadratureRule build_disk_quadrature(const DiskMeasureParams& params,
                                     int n_radial, int n_angular) {
  params.validate();
  require_rule_sizes(n_radial, n_angular);
  QuadratureRule rule;
  gauss_jacobi_unit(n_radial, params.alpha, params.beta0, rule.radial_nodes,
                    rule.radial_weights);
  // B(a+1, beta0+1) / B(a+1, beta0+p+1) = (a+beta0+2)_p / (beta0+1)_p.
  const double scale =
      pochhammer_ratio(params.alpha + params.beta0 + 2.0, params.beta0 + 1.0, params.p);
  for (std::size_t i = 0; i < rule.radial_nodes.size(); ++i) {
    rule.radial_weights[i] *= scale * ipow(rule.radial_nodes[i], params.p);
  }
  rule.angular_count = n_angular;
  rule.radius_squared_scale = params.R * params.R;
  return rule;
}

QuadratureRule build_fock_quadrature(const FockMeasureParams& params,
                                     int n_radial, int n_angular) {
  params.validate();
  require_rule_sizes(n_radial, n_angular);
  QuadratureRule rule;
  gauss_laguerre(n_radial, params.beta0, rule.radial_nodes, rule.radial_weights);
  // Gamma(beta0+1) / Gamma(beta0+p+1) = 1 / (beta0+1)_p.
  const double scale = 1.0 / pochhammer(params.beta0 + 1.0, params.p);
  for (std::size_t i = 0; i < rule.radial_nodes.size(); ++i) {
    rule.radial_weights[i] *= scale * ipow(rule.radial_nodes[i], params.p);
  }
  rule.angular_count = n_angular;
  rule.radius_squared_scale = 1.0 / params.theta;
  return rule;
}

}  // namespace rkhs
