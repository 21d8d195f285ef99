#include "rkhs/transforms.hpp"

#include <cmath>
#include <sstream>

namespace rkhs {
namespace {

struct IndexPattern {
  int step;        // 1 for the full basis, 2 for a parity sub-basis
  int source_offset;
  int target_offset;
};

// Index pairs (step*n + source_offset, step*n + target_offset). The
// involution is the union of the even-odd pattern and its transpose.
IndexPattern pattern(TransformKind kind) {
  switch (kind) {
    case TransformKind::full: return {1, 0, 0};
    case TransformKind::even_even: return {2, 0, 0};
    case TransformKind::odd_odd: return {2, 1, 1};
    case TransformKind::even_odd: return {2, 0, 1};
    case TransformKind::involution: return {2, 0, 1};
  }
  return {1, 0, 0};
}

double disk_a0(const FamilyParams& params) { return params.alpha + params.beta0 + 2.0; }
double family_b(const FamilyParams& params) { return params.beta0 + 1.0; }

// e_{k+1}^p / e_k^p coefficient ratio; independent of p.
double step_ratio(Family family, int k, const FamilyParams& params) {
  const double b = family_b(params);
  if (family == Family::disk) return std::sqrt((disk_a0(params) + k) / (b + k));
  return std::sqrt(params.theta / (b + k));
}

void require_disk_argument(complex u, const char* who) {
  if (!(std::abs(u) < kRadiusGuard)) {
    std::ostringstream msg;
    msg << who << ": |z conj(w)| = " << std::abs(u) << " outside the disk (guard "
        << kRadiusGuard << ")";
    throw DomainError(msg.str());
  }
}

// conj(w)^{-a} z^{-b}; DomainError at zero arguments raised to negative powers.
complex pole_factor(complex z, complex w, int a, int b) {
  if ((a > 0 && w == complex(0.0)) || (b > 0 && z == complex(0.0))) {
    throw DomainError("transform kernel: z and w must be nonzero when negative powers occur");
  }
  return ipow(std::conj(w), -a) * ipow(z, -b);
}

// sum_n B(step n + so, p) B(step n + to, q) u^{step n} with coefficients
// updated by step ratios.
complex pattern_series(Family family, const IndexPattern& pat, int p, int q,
                       const FamilyParams& params, complex u) {
  double coefficient = basis_coeff(family, pat.source_offset, p, params) *
                       basis_coeff(family, pat.target_offset, q, params);
  const complex u_step = ipow(u, pat.step);
  complex power(1.0);
  int ks = pat.source_offset;
  int kt = pat.target_offset;
  auto next = [&](int) {
    const complex term = coefficient * power;
    for (int j = 0; j < pat.step; ++j) {
      coefficient *= step_ratio(family, ks + j, params) * step_ratio(family, kt + j, params);
    }
    ks += pat.step;
    kt += pat.step;
    power *= u_step;
    return term;
  };
  SeriesControls controls;
  controls.max_terms = 20000;
  const SeriesResult sum = sum_series(next, controls);
  if (sum.reason != Termination::converged) {
    throw ConvergenceError("transform kernel series did not converge");
  }
  return sum.value;
}

// Brute-force left side: every coefficient computed from its definition.
complex direct_series(Family family, const IndexPattern& pat, int p, int q,
                      const FamilyParams& params, complex xi) {
  const complex xi_step = ipow(xi, pat.step);
  complex power(1.0);
  auto next = [&](int n) {
    const double coefficient = basis_coeff(family, pat.step * n + pat.source_offset, p, params) *
                               basis_coeff(family, pat.step * n + pat.target_offset, q, params);
    const complex term = coefficient * power;
    power *= xi_step;
    return term;
  };
  SeriesControls controls;
  controls.max_terms = 20000;
  const SeriesResult sum = sum_series(next, controls);
  if (sum.reason != Termination::converged) {
    throw ConvergenceError("series identity: left side did not converge");
  }
  return sum.value;
}

complex fock_f(complex x, int p, int q, const FamilyParams& params) {
  const double b = family_b(params);
  return d_pq(p, q, params.theta, params.beta0) *
         pfq({1.0}, {b / 2.0, (b + 1.0) / 2.0}, (x / 2.0) * (x / 2.0));
}

complex disk_shifted_3f2(complex u, const FamilyParams& params) {
  const double a0 = disk_a0(params);
  const double b = family_b(params);
  return pfq({1.0, (a0 + 1.0) / 2.0, (a0 + 2.0) / 2.0}, {(b + 1.0) / 2.0, (b + 2.0) / 2.0},
             u * u);
}

void validate_family(Family family, const FamilyParams& params) {
  if (!(params.beta0 > -1.0 && params.beta0 <= 0.0)) {
    throw DomainError("transform: beta0 must lie in (-1, 0]");
  }
  if (family == Family::disk && !(params.alpha > -1.0)) {
    throw DomainError("transform: alpha must be > -1");
  }
  if (family == Family::fock && !(params.theta > 0.0)) {
    throw DomainError("transform: theta must be positive");
  }
}

}  // namespace

void TransformSpec::validate() const {
  if (p < 0 || q < 0) throw DomainError("transform: p and q must be non-negative");
  if (kind == TransformKind::involution && p != q) {
    throw DomainError("transform: the involution requires p == q");
  }
  validate_family(family, params);
}

std::string_view to_string(Family family) {
  return family == Family::disk ? "disk" : "fock";
}

std::string_view to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::full: return "full";
    case TransformKind::even_even: return "even-even";
    case TransformKind::odd_odd: return "odd-odd";
    case TransformKind::even_odd: return "even-odd";
    case TransformKind::involution: return "involution";
  }
  return "full";
}

std::string_view to_string(Parity parity) { return parity == Parity::even ? "even" : "odd"; }

std::optional<Family> parse_family(std::string_view text) {
  if (text == "disk" || text == "bergman") return Family::disk;
  if (text == "fock" || text == "bargmann") return Family::fock;
  return std::nullopt;
}

std::optional<TransformKind> parse_transform_kind(std::string_view text) {
  if (text == "full" || text == "D") return TransformKind::full;
  if (text == "even-even" || text == "even" || text == "G") return TransformKind::even_even;
  if (text == "odd-odd" || text == "odd" || text == "J") return TransformKind::odd_odd;
  if (text == "even-odd" || text == "S") return TransformKind::even_odd;
  if (text == "involution" || text == "T") return TransformKind::involution;
  return std::nullopt;
}

double gamma_coeff(int n, int p, double alpha, double beta0) {
  const double a0 = alpha + beta0 + 2.0;
  const double b = beta0 + 1.0;
  return std::sqrt(pochhammer_ratio(b, a0, p) * pochhammer_ratio(a0, b, n));
}

double c_pq(int p, int q, double alpha, double beta0) {
  const double a0 = alpha + beta0 + 2.0;
  const double b = beta0 + 1.0;
  return std::sqrt(pochhammer_ratio(b, a0, p) * pochhammer_ratio(b, a0, q));
}

double sigma_coeff(int n, int p, double theta, double beta0) {
  const double b = beta0 + 1.0;
  const double log_sq = (n - p) * std::log(theta) + log_pochhammer(b, p).log_abs -
                        log_pochhammer(b, n).log_abs;
  return std::exp(0.5 * log_sq);
}

double d_pq(int p, int q, double theta, double beta0) {
  const double b = beta0 + 1.0;
  const double log_sq = log_pochhammer(b, p).log_abs + log_pochhammer(b, q).log_abs -
                        (p + q) * std::log(theta);
  return std::exp(0.5 * log_sq);
}

double basis_coeff(Family family, int n, int p, const FamilyParams& params) {
  if (family == Family::disk) return gamma_coeff(n, p, params.alpha, params.beta0);
  return sigma_coeff(n, p, params.theta, params.beta0);
}

SpaceParams family_space(Family family, int p, const FamilyParams& params) {
  if (family == Family::disk) {
    return BergmanDirichletParams{params.alpha, params.beta0, p, 1.0, 0};
  }
  return BargmannDirichletParams{params.theta, params.beta0, p, 0};
}

SpaceParams source_space(const TransformSpec& spec) {
  return family_space(spec.family, spec.p, spec.params);
}

SpaceParams target_space(const TransformSpec& spec) {
  return family_space(spec.family, spec.q, spec.params);
}

std::string_view to_string(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::disk_full: return "disk_full";
    case IdentityKind::disk_even: return "disk_even";
    case IdentityKind::disk_odd: return "disk_odd";
    case IdentityKind::disk_even_odd: return "disk_even_odd";
    case IdentityKind::fock_full: return "fock_full";
    case IdentityKind::fock_even: return "fock_even";
    case IdentityKind::fock_odd: return "fock_odd";
    case IdentityKind::fock_even_odd: return "fock_even_odd";
  }
  return "disk_full";
}

std::optional<IdentityKind> parse_identity_kind(std::string_view text) {
  for (IdentityKind kind : {IdentityKind::disk_full, IdentityKind::disk_even, IdentityKind::disk_odd,
                            IdentityKind::disk_even_odd, IdentityKind::fock_full, IdentityKind::fock_even,
                            IdentityKind::fock_odd, IdentityKind::fock_even_odd}) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

Family identity_family(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::disk_full:
    case IdentityKind::disk_even:
    case IdentityKind::disk_odd:
    case IdentityKind::disk_even_odd: return Family::disk;
    default: return Family::fock;
  }
}

IdentitySides series_identity(IdentityKind kind, complex xi, int p, int q,
                              const FamilyParams& params) {
  const Family family = identity_family(kind);
  validate_family(family, params);
  if (p < 0 || q < 0) throw DomainError("series identity: p and q must be non-negative");
  if (family == Family::disk) require_disk_argument(xi, "series identity");

  const double b = family_b(params);
  IdentitySides sides;
  switch (kind) {
    case IdentityKind::disk_full:
      sides.lhs = direct_series(family, {1, 0, 0}, p, q, params, xi);
      sides.rhs = c_pq(p, q, params.alpha, params.beta0) *
                  pfq({1.0, disk_a0(params)}, {b}, xi);
      break;
    case IdentityKind::disk_even: {
      const double a0 = disk_a0(params);
      sides.lhs = direct_series(family, {2, 0, 0}, p, q, params, xi);
      sides.rhs = c_pq(p, q, params.alpha, params.beta0) *
                  pfq({1.0, a0 / 2.0, (a0 + 1.0) / 2.0}, {b / 2.0, (b + 1.0) / 2.0}, xi * xi);
      break;
    }
    case IdentityKind::disk_odd:
      sides.lhs = direct_series(family, {2, 1, 1}, p, q, params, xi);
      sides.rhs = disk_a0(params) / b * c_pq(p, q, params.alpha, params.beta0) *
                  disk_shifted_3f2(xi, params);
      break;
    case IdentityKind::disk_even_odd:
      sides.lhs = direct_series(family, {2, 0, 1}, p, q, params, xi);
      sides.rhs = std::sqrt(disk_a0(params) / b) * c_pq(p, q, params.alpha, params.beta0) *
                  disk_shifted_3f2(xi, params);
      break;
    case IdentityKind::fock_full:
      sides.lhs = direct_series(family, {1, 0, 0}, p, q, params, xi);
      sides.rhs = d_pq(p, q, params.theta, params.beta0) * pfq({1.0}, {b}, params.theta * xi);
      break;
    case IdentityKind::fock_even:
      sides.lhs = direct_series(family, {2, 0, 0}, p, q, params, xi);
      sides.rhs = fock_f(params.theta * xi, p, q, params);
      break;
    case IdentityKind::fock_odd:
      sides.lhs = direct_series(family, {2, 1, 1}, p, q, params, xi);
      sides.rhs = params.theta / b * fock_f(params.theta * xi, p, q, params);
      break;
    case IdentityKind::fock_even_odd:
      sides.lhs = direct_series(family, {2, 0, 1}, p, q, params, xi);
      sides.rhs = std::sqrt(params.theta / b) * fock_f(params.theta * xi, p, q, params);
      break;
  }
  return sides;
}

complex transform_kernel(const TransformSpec& spec, complex z, complex w) {
  spec.validate();
  const FamilyParams& params = spec.params;
  const int p = spec.p;
  const int q = spec.q;
  const complex u = std::conj(w) * z;
  const double b = family_b(params);

  if (spec.family == Family::disk) {
    require_disk_argument(u, "transform kernel");
    const double a0 = disk_a0(params);
    const double c = c_pq(p, q, params.alpha, params.beta0);
    switch (spec.kind) {
      case TransformKind::full:
        return pole_factor(z, w, p, q) * c * pfq({1.0, a0}, {b}, u);
      case TransformKind::even_even:
        return pole_factor(z, w, p, q) * c *
               pfq({1.0, a0 / 2.0, (a0 + 1.0) / 2.0}, {b / 2.0, (b + 1.0) / 2.0}, u * u);
      case TransformKind::odd_odd:
        return pole_factor(z, w, p - 1, q - 1) * (a0 / b) * c * disk_shifted_3f2(u, params);
      default: break;
    }
  } else {
    const double d = d_pq(p, q, params.theta, params.beta0);
    const complex x = params.theta * u;
    switch (spec.kind) {
      case TransformKind::full:
        return pole_factor(z, w, p, q) * d * pfq({1.0}, {b}, x);
      case TransformKind::even_even:
        return pole_factor(z, w, p, q) * fock_f(x, p, q, params);
      case TransformKind::odd_odd:
        return pole_factor(z, w, p - 1, q - 1) * (params.theta / b) * d *
               pfq({1.0}, {(b + 1.0) / 2.0, (b + 2.0) / 2.0}, (x / 2.0) * (x / 2.0));
      default: break;
    }
  }

  const IndexPattern pat = pattern(spec.kind);
  const complex series = pattern_series(spec.family, pat, p, q, params, u);
  if (spec.kind == TransformKind::even_odd) return pole_factor(z, w, p, q - 1) * series;
  // Involution: even-odd part plus its transpose, (z + conj w) / (conj w z)^p.
  return (z + std::conj(w)) * pole_factor(z, w, p, p) * series;
}

complex displayed_transform_kernel(const TransformSpec& spec, complex z, complex w) {
  spec.validate();
  const FamilyParams& params = spec.params;
  const int p = spec.p;
  const int q = spec.q;
  const complex u = std::conj(w) * z;
  const double b = family_b(params);

  if (spec.family == Family::disk) {
    require_disk_argument(u, "transform kernel");
    const double a0 = disk_a0(params);
    const double c = c_pq(p, q, params.alpha, params.beta0);
    switch (spec.kind) {
      case TransformKind::even_odd:
        return std::sqrt(a0 / b) * c * pole_factor(z, w, p, q - 1) *
               disk_shifted_3f2(u, params);
      case TransformKind::involution: {
        // Closed form carries z^{q-1}; q = p here.
        const complex inner = pole_factor(z, w, p, p - 1) * disk_shifted_3f2(u, params);
        return std::sqrt(a0 / b) * pochhammer_ratio(b, a0, p) * inner.real();
      }
      default: return transform_kernel(spec, z, w);
    }
  }

  const complex x = params.theta * u;
  switch (spec.kind) {
    case TransformKind::full: return transform_kernel(spec, z, w);
    case TransformKind::even_even: return pole_factor(z, w, p, q) * fock_f(x, p, q, params);
    case TransformKind::odd_odd:
      return pole_factor(z, w, p - 1, q - 1) * (params.theta / b) * fock_f(x, p, q, params);
    case TransformKind::even_odd:
      return pole_factor(z, w, p, q - 1) * std::sqrt(params.theta / b) *
             fock_f(x, p, q, params);
    case TransformKind::involution: break;
  }
  throw UnsupportedError("no closed-form kernel for the Fock involution");
}

complex basis_sum_kernel(const TransformSpec& spec, complex z, complex w, int truncation) {
  spec.validate();
  const SpaceParams src = source_space(spec);
  const SpaceParams tgt = target_space(spec);
  auto term = [&](int ks, int kt) {
    const complex e_src = basis_element(ks - spec.p, src).evaluate(w);
    const complex e_tgt = basis_element(kt - spec.q, tgt).evaluate(z);
    return std::conj(e_src) * e_tgt;
  };
  const IndexPattern pat = pattern(spec.kind);
  complex sum(0.0);
  for (int n = 0; pat.step * n + std::max(pat.source_offset, pat.target_offset) <= truncation;
       ++n) {
    const int ks = pat.step * n + pat.source_offset;
    const int kt = pat.step * n + pat.target_offset;
    sum += term(ks, kt);
    if (spec.kind == TransformKind::involution) sum += term(kt, ks);
  }
  return sum;
}

std::vector<complex> to_basis_coefficients(const LaurentSeries& f, Family family, int p,
                                           const FamilyParams& params) {
  for (int n = f.min_index(); n < -p && n <= f.max_index(); ++n) {
    if (f[n] != complex(0.0)) {
      throw IndexError("series has a pole of order above p = " + std::to_string(p));
    }
  }
  const int top = f.max_index() + p;
  std::vector<complex> a(top >= 0 ? top + 1 : 0);
  for (int k = 0; k <= top; ++k) a[k] = f[k - p] / basis_coeff(family, k, p, params);
  return a;
}

LaurentSeries from_basis_coefficients(const std::vector<complex>& a, Family family, int p,
                                      const FamilyParams& params) {
  std::vector<complex> c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    c[k] = a[k] * basis_coeff(family, static_cast<int>(k), p, params);
  }
  return LaurentSeries(-p, std::move(c));
}

LaurentSeries to_laurent(const SubspaceVector& v, Family family, int p,
                         const FamilyParams& params) {
  const int offset = v.parity == Parity::even ? 0 : 1;
  std::vector<complex> a(v.coefficients.empty() ? 0 : 2 * v.coefficients.size() + 1);
  for (std::size_t k = 0; k < v.coefficients.size(); ++k) {
    a[2 * k + offset] = v.coefficients[k];
  }
  return from_basis_coefficients(a, family, p, params);
}

SubspaceVector apply_transform_coeff(const TransformSpec& spec, const SubspaceVector& v) {
  spec.validate();
  auto require = [&](Parity expected) {
    if (v.parity != expected) {
      throw ParityError(std::string(to_string(spec.kind)) + " transform acts on the " +
                        std::string(to_string(expected)) + " subspace");
    }
  };
  SubspaceVector out = v;
  switch (spec.kind) {
    case TransformKind::full: break;
    case TransformKind::even_even: require(Parity::even); break;
    case TransformKind::odd_odd: require(Parity::odd); break;
    case TransformKind::even_odd:
      require(Parity::even);
      out.parity = Parity::odd;
      break;
    case TransformKind::involution:
      out.parity = v.parity == Parity::even ? Parity::odd : Parity::even;
      break;
  }
  return out;
}

std::vector<complex> apply_transform_basis(const TransformSpec& spec,
                                           const std::vector<complex>& a) {
  spec.validate();
  auto require_zero = [&](std::size_t parity, const char* subspace) {
    for (std::size_t k = parity; k < a.size(); k += 2) {
      if (a[k] != complex(0.0)) {
        throw ParityError(std::string(to_string(spec.kind)) + " transform acts on the " +
                          subspace + " subspace");
      }
    }
  };
  std::vector<complex> out;
  switch (spec.kind) {
    case TransformKind::full: out = a; break;
    case TransformKind::even_even: require_zero(1, "even"); out = a; break;
    case TransformKind::odd_odd: require_zero(0, "odd"); out = a; break;
    case TransformKind::even_odd:
      require_zero(1, "even");
      out.assign(a.size() + 1, 0.0);
      for (std::size_t k = 0; k < a.size(); k += 2) out[k + 1] = a[k];
      break;
    case TransformKind::involution:
      out.assign(a.size() + 1, 0.0);
      for (std::size_t k = 0; k < a.size(); ++k) out[k % 2 == 0 ? k + 1 : k - 1] = a[k];
      break;
  }
  while (!out.empty() && out.back() == complex(0.0)) out.pop_back();
  return out;
}

LaurentSeries apply_transform_coeff(const TransformSpec& spec, const LaurentSeries& f) {
  spec.validate();
  const std::vector<complex> a = to_basis_coefficients(f, spec.family, spec.p, spec.params);
  return from_basis_coefficients(apply_transform_basis(spec, a), spec.family, spec.q,
                                 spec.params);
}

QuadratureRule source_quadrature(const TransformSpec& spec, int n_radial, int n_angular) {
  spec.validate();
  if (spec.family == Family::disk) {
    return build_disk_quadrature({spec.params.alpha, spec.params.beta0, spec.p, 1.0},
                                 n_radial, n_angular);
  }
  return build_fock_quadrature({spec.params.theta, spec.params.beta0, spec.p}, n_radial,
                               n_angular);
}

complex apply_transform_quadrature(const TransformSpec& spec, const LaurentSeries& f,
                                   complex z, const QuadratureRule& rule) {
  spec.validate();
  if (f.empty()) return 0.0;
  return integrate(rule, [&](complex w) { return f(w) * transform_kernel(spec, z, w); });
}

}  // namespace rkhs
