#pragma once

#include <array>
#include <optional>

#include "rkhs/spaces.hpp"

namespace rkhs {

/// Closed forms refuse |xi| >= kRadiusGuard * (radius of convergence).
inline constexpr double kRadiusGuard = 0.999;

/// K(xi) of D^2_m(D_R, mu^R_{alpha,beta}): polynomial part, xi^m/(m!)^2 4F3
/// part and, for p > m, the principal (Gamma-ratio) part. K(z, w) = K(z conj w).
complex bergman_kernel(complex xi, const BergmanDirichletParams& params);

/// Principal part of bergman_kernel (zero when p <= m).
complex bergman_principal_part(complex xi, const BergmanDirichletParams& params);

/// Brute-force sum_{n=min(m-p,0)}^{truncation} xi^n / ||z^n||^2.
complex bergman_kernel_series(complex xi, const BergmanDirichletParams& params,
                              int truncation = 800);

/// The three m = 0 rewrites: 2F1 Laurent form, (1-xi/R^2)^{-(alpha+2)} 2F1
/// form and the binomial-sum form. The third needs beta0 != 0.
struct BergmanM0Forms {
  complex hypergeometric;
  complex euler_transformed;
  std::optional<complex> binomial_sum;
};
BergmanM0Forms bergman_kernel_m0_forms(complex xi, const BergmanDirichletParams& params);

/// L(xi) of B^2_m(C, nu_{theta,beta}) with 3F3 part and principal part.
complex bargmann_kernel(complex xi, const BargmannDirichletParams& params);
complex bargmann_principal_part(complex xi, const BargmannDirichletParams& params);
complex bargmann_kernel_series(complex xi, const BargmannDirichletParams& params,
                               int max_terms = 4000);

/// H(xi) of H^2_{m,beta}(D) with 3F2 part and principal part.
complex hardy_kernel(complex xi, const HardyDirichletParams& params);
complex hardy_principal_part(complex xi, const HardyDirichletParams& params);
complex hardy_kernel_series(complex xi, const HardyDirichletParams& params,
                            int truncation = 4000);

/// Dispatch on the space family.
complex kernel(complex xi, const SpaceParams& space);
complex kernel_series(complex xi, const SpaceParams& space);

/// Two-point form K(z, w) = kernel(z * conj(w)).
inline complex kernel(complex z, complex w, const SpaceParams& space) {
  return kernel(z * std::conj(w), space);
}

}  // namespace rkhs
