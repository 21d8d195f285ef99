#pragma once

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "rkhs/errors.hpp"

namespace rkhs {

using complex = std::complex<double>;

/// Rising factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1.
///
/// The product is accumulated directly while it stays finite and switches to
/// a signed log-space accumulation afterwards, so the returned value is only
/// +-inf when the true result is outside double range.
double pochhammer(double a, int n);

/// log|(a)_n| and the sign of (a)_n. Sign is 0 when the product vanishes.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;
};
SignedLog log_pochhammer(double a, int n);

/// (a)_n / (b)_n as a running product of ratios; never overflows for the
/// a ~ b regimes that appear in norm and kernel coefficients.
double pochhammer_ratio(double a, double b, int n);

/// log((a)_n / (b)_n) for a, b > 0.
double log_pochhammer_ratio(double a, double b, int n);

/// log Gamma(x) for x > 0 (Lanczos, g = 7, nine coefficients).
double log_gamma(double x);

/// Gamma(x) for x > 0.
double gamma(double x);

/// Gamma(a) / Gamma(b) for a, b > 0. Integer differences are evaluated as an
/// exact Pochhammer product.
double gamma_ratio(double a, double b);

/// Euler Beta function B(a, b), a, b > 0.
double beta(double a, double b);

/// Lower incomplete Beta function B_x(a, b) = int_0^x t^{a-1}(1-t)^{b-1} dt
/// for 0 < x <= 1.
double incomplete_beta(double x, double a, double b);

/// Parameters of a generalized hypergeometric series kFj.
struct HypergeomSpec {
  std::vector<double> numerator;
  std::vector<double> denominator;
  int max_terms = 2000;
  double rel_tol = 1e-14;

  void validate() const;
};

enum class Termination {
  converged,   ///< stopping rule met (includes terminating polynomials)
  max_terms,   ///< ran out of terms
};

std::string_view to_string(Termination t);

struct SeriesResult {
  complex value;
  int terms = 0;
  Termination reason = Termination::converged;
};

/// Controls shared by every series summation in the library.
struct SeriesControls {
  int max_terms = 2000;
  double rel_tol = 1e-14;
  /// Consecutive small terms required before stopping.
  int quiet_terms = 3;
};

/// Sum a series whose n-th term is produced by `next(n)`, stopping once
/// |term| <= rel_tol |partial sum| for `quiet_terms` consecutive terms.
/// Returns the partial sum and the reason it stopped; does not throw.
template <typename NextTerm>
SeriesResult sum_series(NextTerm&& next, const SeriesControls& controls = {}) {
  SeriesResult result;
  int quiet = 0;
  for (int n = 0; n < controls.max_terms; ++n) {
    const complex term = next(n);
    result.value += term;
    result.terms = n + 1;
    if (std::abs(term) <= controls.rel_tol * std::abs(result.value)) {
      if (++quiet >= controls.quiet_terms) {
        result.reason = Termination::converged;
        return result;
      }
    } else {
      quiet = 0;
    }
  }
  result.reason = Termination::max_terms;
  return result;
}

/// Partial sum of kFj(a; b; z) by the recursive term update. Throws
/// DomainError for |z| >= 1 with k = j + 1 (and any z != 0 with k > j + 1
/// unless the series terminates), ConvergenceError when max_terms is hit.
SeriesResult pfq_eval(const HypergeomSpec& spec, complex z);

/// Convenience wrapper returning only the value, with default controls.
complex pfq(std::vector<double> numerator, std::vector<double> denominator,
            complex z);

/// Integer power by repeated squaring; exact sign and phase handling for
/// negative exponents.
complex ipow(complex z, int n);
double ipow(double x, int n);

}  // namespace rkhs
