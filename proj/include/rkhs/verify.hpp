#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rkhs/transforms.hpp"

namespace rkhs {

using ParamValue = std::variant<std::int64_t, double, bool, std::string, complex>;

struct VerificationReport {
  std::string check_name;
  /// Insertion-ordered so that serialization is deterministic.
  std::vector<std::pair<std::string, ParamValue>> parameters;
  double measured_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double runtime_ms = 0.0;

  void set(std::string key, ParamValue value);
  const ParamValue* find(std::string_view key) const;
  /// passed = measured_error <= tolerance (false for NaN).
  void finalize();
};

/// SplitMix64 generator.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform on the square [-1, 1] x [-1, 1].
  complex unit_square();
  int integer(int lo, int hi);

 private:
  std::uint64_t state_;
};

/// Coefficients uniform in the complex unit square on [min_index, max_index].
LaurentSeries random_series(SplitMix64& rng, int min_index, int max_index);

/// |a - b| / |b| when |b| > 1, |a - b| otherwise.
double scaled_error(complex a, complex b);

enum class InnerProductPath { coefficient, quadrature };

/// |<f, K(., w)> - f(w)|. The coefficient path reads the Laurent coefficients
/// of the closed-form kernel off a circle and pairs them with the monomial
/// norms; the quadrature path (m = 0 only) integrates f conj(K(., w)) against
/// the measure. Default tolerances 1e-8 and 1e-6.
VerificationReport check_reproducing(const SpaceParams& space, const LaurentSeries& f,
                                     complex w,
                                     InnerProductPath path = InnerProductPath::coefficient,
                                     std::optional<double> tolerance = std::nullopt);

/// Max |Gram - I| over the first N normalized basis monomials, with the inner
/// product built from its integral definition.
VerificationReport check_orthonormality(const SpaceParams& space, int N,
                                        double tolerance = 1e-8);

enum class LimitKind { bargmann, hardy };

/// Bargmann: Bergman kernels with alpha = theta R^2 over increasing R against
/// the Bargmann kernel of `params`. Hardy: Bergman kernels on the unit disk
/// over alpha -> -1 against the Hardy kernel. Passes iff the errors strictly
/// decrease and the last one is within tolerance.
struct LimitParams {
  double theta = 1.0;
  double beta0 = 0.0;
  int p = 0;
  int m = 0;
};
VerificationReport check_limit(LimitKind kind, complex xi, const LimitParams& params,
                               const std::vector<double>& sequence,
                               double tolerance = 1e-2);

/// Closed-form kernel vs coefficient series at the given points.
VerificationReport check_kernel_series(const SpaceParams& space,
                                       const std::vector<complex>& points,
                                       double tolerance = 1e-9);

/// Series identity at the given points. In assert mode the error is the
/// largest scaled |lhs - rhs|. In detect mode the check records whether the
/// sides agree and passes when the pointwise verdict matches a verdict from
/// circle-extracted Taylor coefficients.
enum class IdentityMode { assert_equal, detect };
VerificationReport check_identity(IdentityKind kind, int p, int q,
                                  const FamilyParams& params,
                                  const std::vector<complex>& points, IdentityMode mode,
                                  double tolerance = 1e-10);

/// Norm preservation of apply_transform_coeff on basis-coefficient vectors.
VerificationReport check_isometry_coeff(const TransformSpec& spec,
                                        const std::vector<std::vector<complex>>& vectors,
                                        double tolerance = 1e-12);

/// Norm preservation with Tf evaluated by quadrature on a circle and its
/// coefficients recovered by a discrete Fourier transform.
VerificationReport check_isometry_quadrature(const TransformSpec& spec,
                                             const std::vector<std::vector<complex>>& vectors,
                                             double tolerance = 1e-7);

/// transform_kernel vs basis_sum_kernel at the given (z, w) pairs.
VerificationReport check_transform_kernel(const TransformSpec& spec,
                                          const std::vector<std::pair<complex, complex>>& points,
                                          double tolerance = 1e-9);

/// T(T a) == a bit for bit.
VerificationReport check_involution(const TransformSpec& spec,
                                    const std::vector<std::vector<complex>>& vectors);

/// Group names accepted by run_suite, in execution order.
const std::vector<std::string>& suite_groups();

struct SuiteConfig {
  std::uint64_t seed = 20240601;
  std::vector<std::string> groups = suite_groups();
  /// Replaces every check's tolerance when set.
  std::optional<double> tolerance;
};

/// Runs the selected groups. A check that throws is recorded as failed with
/// the message in its parameters; the suite never aborts.
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

/// Fixed-width text table, one line per report.
std::string format_report_table(const std::vector<VerificationReport>& reports);

}  // namespace rkhs
