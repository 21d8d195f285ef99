#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "rkhs/specfun.hpp"

namespace rkhs {

/// Radial probability measure |z|^{2b}(R^2-|z|^2)^a dA / (R^{2(a+b+1)} B(a+1,b+1))
/// on the disk of radius R, with b = beta0 + p.
struct DiskMeasureParams {
  double alpha = 0.0;
  double beta0 = 0.0;
  int p = 0;
  double R = 1.0;

  double beta() const { return beta0 + p; }
  void validate() const;
};

/// Probability measure theta^{b+1}/Gamma(b+1) |z|^{2b} e^{-theta|z|^2} dA on
/// the plane, with b = beta0 + p.
struct FockMeasureParams {
  double theta = 1.0;
  double beta0 = 0.0;
  int p = 0;

  double beta() const { return beta0 + p; }
  void validate() const;
};

/// Tensor rule for a rotation-invariant probability measure.
///
/// Radial nodes are in the normalized variable t (t = |z|^2/R^2 on the disk,
/// t = theta |z|^2 on the plane); |z|^2 = t * radius_squared_scale. The
/// weights already include the measure's normalization and sum to one, and
/// the angular part is the uniform trapezoid rule with angular_count points.
struct QuadratureRule {
  std::vector<double> radial_nodes;
  std::vector<double> radial_weights;
  int angular_count = 0;
  double radius_squared_scale = 1.0;

  std::size_t size() const { return radial_nodes.size() * angular_count; }
  double radius(std::size_t i) const {
    return std::sqrt(radial_nodes[i] * radius_squared_scale);
  }
};

/// Density of mu^R_{alpha,beta} with respect to dA = dx dy / pi.
double disk_density(complex z, const DiskMeasureParams& params);

/// Density of nu_{theta,beta} with respect to dA.
double fock_density(complex z, const FockMeasureParams& params);

/// Gauss rule on (0,1) for the probability weight t^b (1-t)^a / B(a+1, b+1).
/// Nodes come from the eigenvalues of the Jacobi matrix; weights from the
/// Christoffel function 1 / sum_k p_k(t_i)^2.
void gauss_jacobi_unit(int n, double a, double b, std::vector<double>& nodes,
                       std::vector<double>& weights);

/// Gauss rule on (0,inf) for the probability weight t^b e^{-t} / Gamma(b+1).
void gauss_laguerre(int n, double b, std::vector<double>& nodes,
                    std::vector<double>& weights);

/// Rule for mu^R_{alpha,beta0+p}. The Gauss rule is built for t^{beta0} and
/// the factor t^p is folded into the weights, so Laurent integrands down to
/// |z|^{-2p} are integrated exactly.
QuadratureRule build_disk_quadrature(const DiskMeasureParams& params,
                                     int n_radial = 128, int n_angular = 256);

/// Rule for nu_{theta,beta0+p}, built the same way from generalized
/// Gauss-Laguerre at exponent beta0.
QuadratureRule build_fock_quadrature(const FockMeasureParams& params,
                                     int n_radial = 128, int n_angular = 256);

/// Sum over all nodes of weight * integrand(z).
template <typename F>
complex integrate(const QuadratureRule& rule, F&& integrand) {
  const int m = rule.angular_count;
  std::vector<complex> unit(m);
  for (int j = 0; j < m; ++j) {
    unit[j] = std::polar(1.0, 2.0 * std::numbers::pi * j / m);
  }
  complex total(0.0);
  for (std::size_t i = 0; i < rule.radial_nodes.size(); ++i) {
    const double r = rule.radius(i);
    complex ring(0.0);
    for (int j = 0; j < m; ++j) ring += integrand(r * unit[j]);
    total += rule.radial_weights[i] * ring / static_cast<double>(m);
  }
  return total;
}

/// Quadrature estimate of int f conj(g) dmu.
template <typename F, typename G>
complex inner_product(F&& f, G&& g, const QuadratureRule& rule) {
  return integrate(rule, [&](complex z) { return f(z) * std::conj(g(z)); });
}

}  // namespace rkhs
