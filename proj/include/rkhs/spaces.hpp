#pragma once

#include <string>
#include <utility>
#include <variant>

#include "rkhs/laurent.hpp"
#include "rkhs/measures.hpp"

namespace rkhs {

/// Modified Bergman-Dirichlet space D^2_m(D_R, mu^R_{alpha, beta0+p}).
struct BergmanDirichletParams {
  double alpha = 0.0;
  double beta0 = 0.0;
  int p = 0;
  double R = 1.0;
  int m = 0;

  double beta() const { return beta0 + p; }
  int min_index() const { return std::min(0, m - p); }
  DiskMeasureParams measure() const { return {alpha, beta0, p, R}; }
  void validate() const;
};

/// Modified Bargmann-Dirichlet space B^2_m(C, nu_{theta, beta0+p}).
struct BargmannDirichletParams {
  double theta = 1.0;
  double beta0 = 0.0;
  int p = 0;
  int m = 0;

  double beta() const { return beta0 + p; }
  int min_index() const { return std::min(0, m - p); }
  FockMeasureParams measure() const { return {theta, beta0, p}; }
  void validate() const;
};

/// Modified Hardy-Dirichlet space H^s_{m, beta0+p}(D). Only s = 2 carries a
/// Hilbert structure (norms, kernel).
struct HardyDirichletParams {
  double beta0 = 0.0;
  int p = 0;
  int m = 0;
  double s = 2.0;

  double beta() const { return beta0 + p; }
  int min_index() const { return std::min(0, m - p); }
  void validate() const;
};

using SpaceParams =
    std::variant<BergmanDirichletParams, BargmannDirichletParams, HardyDirichletParams>;

std::string family_name(const SpaceParams& space);
int min_index(const SpaceParams& space);
void validate(const SpaceParams& space);

/// f = f1 + f2 with f1 the indices 0..m-1 and f2 everything else (indices >= m
/// and, when p > m, the principal part m-p..-1).
std::pair<LaurentSeries, LaurentSeries> split_f1_f2(const LaurentSeries& f, int m,
                                                    int p);

/// log ||z^n||^2 in each space, by the three-regime closed forms.
double log_monomial_norm_sq(int n, const BergmanDirichletParams& params);
double log_monomial_norm_sq(int n, const BargmannDirichletParams& params);
double log_monomial_norm_sq(int n, const HardyDirichletParams& params);
double log_monomial_norm_sq(int n, const SpaceParams& space);

/// ||z^n||; the reciprocal is the orthonormal-basis scale epsilon_n.
double monomial_norm_bergman(int n, const BergmanDirichletParams& params);
double monomial_norm_bargmann(int n, const BargmannDirichletParams& params);
double monomial_norm_hardy(int n, const HardyDirichletParams& params);
double monomial_norm(int n, const SpaceParams& space);

/// Pole-order bound for H^s_beta.
int eta(double s, double beta);

/// Diagonal coefficient-space inner product sum_n a_n conj(b_n) ||z^n||^2.
complex dirichlet_inner_product(const LaurentSeries& f, const LaurentSeries& g,
                                const SpaceParams& space);
double dirichlet_norm(const LaurentSeries& f, const SpaceParams& space);

/// The same inner product built from its definition
/// <f1, g1>_mu + <f2^(m), g2^(m)>_mu, with the base inner product taken by
/// quadrature (Bergman, Bargmann) or by the trapezoid rule on the unit circle
/// (Hardy). Independent of the monomial norm tables.
complex dirichlet_inner_product_quadrature(const LaurentSeries& f,
                                           const LaurentSeries& g,
                                           const SpaceParams& space,
                                           int n_radial = 64, int n_angular = 256);

/// Boundary inner product (1/2pi) int f(e^{it}) conj(g(e^{it})) dt by the
/// trapezoid rule; exact for Laurent polynomials of span below n_points.
complex circle_inner_product(const LaurentSeries& f, const LaurentSeries& g,
                             int n_points = 256, double radius = 1.0);

/// M_s(r, f) by the trapezoid rule.
double radial_mean(const LaurentSeries& f, double r, double s, int n_points = 0);

/// Scale every coefficient so that the result is the normalized basis
/// element e_n = z^n / ||z^n|| of the space.
LaurentSeries basis_element(int n, const SpaceParams& space);

}  // namespace rkhs
