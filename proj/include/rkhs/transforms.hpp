#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "rkhs/kernels.hpp"

namespace rkhs {

enum class Family { disk, fock };

/// D (full), G (even-even), J (odd-odd), S (even-odd), T (involution).
enum class TransformKind { full, even_even, odd_odd, even_odd, involution };

enum class Parity { even, odd };

/// Parameters shared by source and target spaces. Disk spaces use alpha and
/// R = 1, m = 0; Fock spaces use theta, m = 0.
struct FamilyParams {
  double alpha = 0.0;
  double theta = 1.0;
  double beta0 = 0.0;
};

struct TransformSpec {
  Family family = Family::disk;
  TransformKind kind = TransformKind::full;
  int p = 0;
  int q = 0;
  FamilyParams params;

  /// The involution needs p == q.
  void validate() const;
};

/// Coefficients against the sub-basis (e_{2k + parity})_k.
struct SubspaceVector {
  Parity parity = Parity::even;
  std::vector<complex> coefficients;

  friend bool operator==(const SubspaceVector&, const SubspaceVector&) = default;
};

std::string_view to_string(Family family);
std::string_view to_string(TransformKind kind);
std::string_view to_string(Parity parity);
std::optional<Family> parse_family(std::string_view text);
/// Accepts the long names (full, even-even, ...) and the letters D, G, J, S, T.
std::optional<TransformKind> parse_transform_kind(std::string_view text);

/// gamma_n^p = sqrt((b0+1)_p/(a0)_p * (a0)_n/(b0+1)_n) with a0 = alpha+beta0+2.
double gamma_coeff(int n, int p, double alpha, double beta0);
double c_pq(int p, int q, double alpha, double beta0);
/// sigma_n^p = sqrt(theta^{n-p} (b0+1)_p / (b0+1)_n).
double sigma_coeff(int n, int p, double theta, double beta0);
double d_pq(int p, int q, double theta, double beta0);

/// gamma_n^p or sigma_n^p depending on the family.
double basis_coeff(Family family, int n, int p, const FamilyParams& params);

/// The m = 0 space whose orthonormal basis is e_n^p = basis_coeff * z^{n-p}.
SpaceParams family_space(Family family, int p, const FamilyParams& params);
SpaceParams source_space(const TransformSpec& spec);
SpaceParams target_space(const TransformSpec& spec);

enum class IdentityKind { disk_full, disk_even, disk_odd, disk_even_odd, fock_full, fock_even, fock_odd, fock_even_odd };

std::string_view to_string(IdentityKind kind);
std::optional<IdentityKind> parse_identity_kind(std::string_view text);
Family identity_family(IdentityKind kind);

/// Left side by direct coefficient summation, right side by the hypergeometric
/// closed form as stated for the identity.
struct IdentitySides {
  complex lhs;
  complex rhs;
};
IdentitySides series_identity(IdentityKind kind, complex xi, int p, int q,
                              const FamilyParams& params);

/// Exact kernel sum_k conj(e^p_{src(k)}(w)) e^q_{tgt(k)}(z): hypergeometric
/// where such a form exists (disk D, G, J; Fock full, even, odd) and the
/// summed power series otherwise.
complex transform_kernel(const TransformSpec& spec, complex z, complex w);

/// Hypergeometric closed-form kernels, kept for comparison. The even-odd and
/// involution forms disagree with the basis sum. Throws UnsupportedError for
/// the Fock involution, which has no closed form.
complex displayed_transform_kernel(const TransformSpec& spec, complex z, complex w);

/// Truncated basis sum through basis index `truncation`, built from the
/// normalized monomials of the source and target spaces.
complex basis_sum_kernel(const TransformSpec& spec, complex z, complex w,
                         int truncation = 400);

/// f = sum_n a_n e_n^p; returns a_0, a_1, ... (f must have min_index >= -p).
std::vector<complex> to_basis_coefficients(const LaurentSeries& f, Family family, int p,
                                           const FamilyParams& params);
LaurentSeries from_basis_coefficients(const std::vector<complex>& a, Family family,
                                      int p, const FamilyParams& params);
LaurentSeries to_laurent(const SubspaceVector& v, Family family, int p,
                         const FamilyParams& params);

/// Basis relabeling. Throws ParityError when v does not lie in the subspace
/// the transform acts on.
SubspaceVector apply_transform_coeff(const TransformSpec& spec, const SubspaceVector& v);
/// The same relabeling on full basis coefficients a_0, a_1, ...; trailing
/// zeros are dropped.
std::vector<complex> apply_transform_basis(const TransformSpec& spec,
                                           const std::vector<complex>& a);
LaurentSeries apply_transform_coeff(const TransformSpec& spec, const LaurentSeries& f);

/// Quadrature rule for the source measure of spec.
QuadratureRule source_quadrature(const TransformSpec& spec, int n_radial = 32,
                                 int n_angular = 64);

/// int f(w) kernel(z, w) dmu_source(w) on the given rule.
complex apply_transform_quadrature(const TransformSpec& spec, const LaurentSeries& f,
                                   complex z, const QuadratureRule& rule);

}  // namespace rkhs
