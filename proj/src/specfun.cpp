#include "rkhs/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace rkhs {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Lanczos series A(x) for x >= 0.5, with the shift z = x - 1.
double lanczos_sum(double x) {
  const double z = x - 1.0;
  double sum = kLanczosCoefficients[0];
  for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
    sum += kLanczosCoefficients[i] / (z + static_cast<double>(i));
  }
  return sum;
}

bool is_nonpositive_integer(double v) {
  return v <= 0.0 && v == std::floor(v);
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) {
    std::ostringstream msg;
    msg << what << " must be positive, got " << v;
    throw DomainError(msg.str());
  }
}

// log Gamma(a) - log Gamma(b) for a, b >= 0.5 without forming either value.
double log_gamma_ratio_lanczos(double a, double b) {
  const double d = a - b;
  const double ta = a - 0.5 + kLanczosG;
  const double tb = b - 0.5 + kLanczosG;
  return d * (std::log(ta) - 1.0) + (b - 0.5) * std::log1p(d / tb) +
         std::log(lanczos_sum(a) / lanczos_sum(b));
}

double log_gamma_ratio(double a, double b) {
  // Shift arguments below 0.5 up with Gamma(x) = Gamma(x + 1) / x.
  double shift = 0.0;
  while (a < 0.5) {
    shift -= std::log(a);
    a += 1.0;
  }
  while (b < 0.5) {
    shift += std::log(b);
    b += 1.0;
  }
  return shift + log_gamma_ratio_lanczos(a, b);
}

}  // namespace

double pochhammer(double a, int n) {
  if (n < 0) throw DomainError("pochhammer: n must be non-negative");
  double product = 1.0;
  for (int j = 0; j < n; ++j) {
    product *= a + j;
    if (!std::isfinite(product)) {
      const SignedLog lg = log_pochhammer(a, n);
      return lg.sign * std::exp(lg.log_abs);
    }
  }
  return product;
}

SignedLog log_pochhammer(double a, int n) {
  if (n < 0) throw DomainError("log_pochhammer: n must be non-negative");
  SignedLog out;
  for (int j = 0; j < n; ++j) {
    const double factor = a + j;
    if (factor == 0.0) {
      return {-std::numeric_limits<double>::infinity(), 0};
    }
    if (factor < 0.0) out.sign = -out.sign;
    out.log_abs += std::log(std::abs(factor));
  }
  return out;
}

double pochhammer_ratio(double a, double b, int n) {
  if (n < 0) throw DomainError("pochhammer_ratio: n must be non-negative");
  double ratio = 1.0;
  for (int j = 0; j < n; ++j) {
    if (b + j == 0.0) throw DomainError("pochhammer_ratio: zero denominator");
    ratio *= (a + j) / (b + j);
  }
  return ratio;
}

double log_pochhammer_ratio(double a, double b, int n) {
  if (n < 0) throw DomainError("log_pochhammer_ratio: n must be non-negative");
  require_positive(a, "log_pochhammer_ratio: a");
  require_positive(b, "log_pochhammer_ratio: b");
  const double d = a - b;
  double sum = 0.0;
  for (int j = 0; j < n; ++j) sum += std::log1p(d / (b + j));
  return sum;
}

double log_gamma(double x) {
  require_positive(x, "log_gamma: x");
  if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
  const double t = x - 0.5 + kLanczosG;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (x - 0.5) * std::log(t) - t +
         std::log(lanczos_sum(x));
}

double gamma(double x) {
  require_positive(x, "gamma: x");
  // Integers are common in norm formulas; keep them exact.
  if (x == std::floor(x) && x <= 171.0) {
    double f = 1.0;
    for (int k = 2; k < static_cast<int>(x); ++k) f *= k;
    return f;
  }
  return std::exp(log_gamma(x));
}

double gamma_ratio(double a, double b) {
  require_positive(a, "gamma_ratio: a");
  require_positive(b, "gamma_ratio: b");
  const double d = a - b;
  if (d == std::floor(d) && std::abs(d) <= 4096.0) {
    const int k = static_cast<int>(d);
    return k >= 0 ? pochhammer(b, k) : 1.0 / pochhammer(a, -k);
  }
  return std::exp(log_gamma_ratio(a, b));
}

double beta(double a, double b) {
  require_positive(a, "beta: a");
  require_positive(b, "beta: b");
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  if (lo <= 20.0) return gamma(lo) * gamma_ratio(hi, lo + hi);
  return std::exp(log_gamma(lo) + log_gamma_ratio(hi, lo + hi));
}

namespace {

// x^a (1-x)^b / a * 2F1(1, a+b; a+1; x), valid for 0 < x < 1.
double incomplete_beta_series(double x, double a, double b) {
  const complex f = pfq({1.0, a + b}, {a + 1.0}, complex(x, 0.0));
  return std::pow(x, a) * std::pow(1.0 - x, b) / a * f.real();
}

}  // namespace

double incomplete_beta(double x, double a, double b) {
  if (!(x > 0.0 && x <= 1.0)) {
    throw DomainError("incomplete_beta: x must lie in (0, 1]");
  }
  require_positive(a, "incomplete_beta: a");
  require_positive(b, "incomplete_beta: b");
  if (x == 1.0) return beta(a, b);
  if (x <= 0.5) return incomplete_beta_series(x, a, b);
  // B_x(a,b) = B(a,b) - B_{1-x}(b,a) keeps the series argument below 1/2.
  return beta(a, b) - incomplete_beta_series(1.0 - x, b, a);
}

void HypergeomSpec::validate() const {
  for (double b : denominator) {
    if (is_nonpositive_integer(b)) {
      std::ostringstream msg;
      msg << "hypergeometric denominator parameter " << b
          << " is zero or a negative integer";
      throw DomainError(msg.str());
    }
  }
  if (max_terms < 1) throw DomainError("hypergeometric max_terms must be >= 1");
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw DomainError("hypergeometric rel_tol must lie in (0, 1)");
  }
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::converged:
      return "converged";
    case Termination::max_terms:
      return "max_terms";
  }
  return "unknown";
}

SeriesResult pfq_eval(const HypergeomSpec& spec, complex z) {
  spec.validate();
  const std::size_t k = spec.numerator.size();
  const std::size_t j = spec.denominator.size();
  bool terminating = false;
  for (double a : spec.numerator) terminating |= is_nonpositive_integer(a);

  if (!terminating && z != complex(0.0)) {
    if (k == j + 1 && std::abs(z) >= 1.0) {
      throw DomainError("pfq_eval: |z| >= 1 outside the disk of convergence");
    }
    if (k > j + 1) {
      throw DomainError("pfq_eval: series with k > j + 1 diverges for z != 0");
    }
  }

  complex term(1.0, 0.0);
  auto next = [&](int n) {
    const complex current = term;
    double ratio = 1.0;
    for (double a : spec.numerator) ratio *= a + n;
    for (double b : spec.denominator) ratio /= b + n;
    term *= ratio * z / static_cast<double>(n + 1);
    return current;
  };
  const SeriesControls controls{spec.max_terms, spec.rel_tol, 3};
  SeriesResult result = sum_series(next, controls);
  if (result.reason == Termination::max_terms) {
    std::ostringstream msg;
    msg << "pfq_eval: no convergence after " << spec.max_terms << " terms";
    throw ConvergenceError(msg.str());
  }
  if (!std::isfinite(result.value.real()) || !std::isfinite(result.value.imag())) {
    throw ConvergenceError("pfq_eval: partial sum overflowed");
  }
  return result;
}

complex pfq(std::vector<double> numerator, std::vector<double> denominator,
            complex z) {
  HypergeomSpec spec;
  spec.numerator = std::move(numerator);
  spec.denominator = std::move(denominator);
  return pfq_eval(spec, z).value;
}

complex ipow(complex z, int n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  complex result(1.0, 0.0);
  complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

double ipow(double x, int n) {
  if (n < 0) return 1.0 / ipow(x, -n);
  double result = 1.0;
  double base = x;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

}  // namespace rkhs
