// Acceptance suite: one PASS/FAIL line per criterion.
//
//   rkhs_acceptance                 run every criterion
//   rkhs_acceptance --criterion N   run criterion N only
//
// Exit status is 0 iff every selected criterion passes.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "rkhs/verify.hpp"

using rkhs::complex;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

std::string fmt(const char* format, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, x);
  return buf;
}

double relative(complex a, complex b) { return std::abs(a - b) / std::abs(b); }

complex random_xi(rkhs::SplitMix64& rng, double max_modulus) {
  while (true) {
    const complex z = max_modulus * rng.unit_square();
    if (std::abs(z) <= max_modulus && std::abs(z) > 1e-3) return z;
  }
}

Outcome finish(double measured, double tolerance, std::string detail = {}) {
  return {measured, tolerance, measured <= tolerance, std::move(detail)};
}

Outcome c01_norms() {
  double worst = 0.0;
  for (double alpha : {0.5, 2.0}) {
    for (double beta0 : {0.0, -0.5}) {
      for (int p : {0, 1, 3}) {
        for (int m : {0, 1, 2}) {
          const rkhs::BergmanDirichletParams params{alpha, beta0, p, 1.0, m};
          for (int n = std::min(0, m - p); n <= 10; ++n) {
            const rkhs::LaurentSeries zn = rkhs::LaurentSeries::monomial(n);
            const double closed = std::pow(rkhs::monomial_norm_bergman(n, params), 2);
            const double quad = rkhs::dirichlet_inner_product_quadrature(zn, zn, params).real();
            worst = std::max(worst, std::abs(quad - closed) / closed);
          }
        }
      }
    }
  }
  return finish(worst, 1e-8, "36 parameter sets");
}

Outcome c02_bergman_closed_form() {
  rkhs::SplitMix64 rng(kSeed + 2);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    rkhs::BergmanDirichletParams params;
    params.alpha = rng.uniform(-0.5, 3.0);
    params.beta0 = rng.uniform(-0.9, 0.0);
    params.p = rng.integer(0, 3);
    params.m = rng.integer(0, 3);
    params.R = rng.uniform(0.5, 2.0);
    const complex xi = random_xi(rng, 0.8 * params.R * params.R);
    worst = std::max(worst, relative(rkhs::bergman_kernel(xi, params),
                                     rkhs::bergman_kernel_series(xi, params, 800)));
  }
  return finish(worst, 1e-9, "100 random samples");
}

Outcome c03_m0_forms() {
  rkhs::SplitMix64 rng(kSeed + 3);
  double worst = 0.0;
  for (double alpha : {0.5, 2.0}) {
    for (double beta0 : {-0.3, -0.7}) {
      for (int p : {0, 1, 3}) {
        const rkhs::BergmanDirichletParams params{alpha, beta0, p, 1.0, 0};
        for (int i = 0; i < 5; ++i) {
          const complex xi = random_xi(rng, 0.8);
          const rkhs::BergmanM0Forms f = rkhs::bergman_kernel_m0_forms(xi, params);
          worst = std::max({worst, relative(f.euler_transformed, f.hypergeometric),
                            relative(*f.binomial_sum, f.hypergeometric),
                            relative(*f.binomial_sum, f.euler_transformed)});
        }
      }
    }
  }
  return finish(worst, 1e-9, "12 parameter sets x 5 points");
}

Outcome c04_bargmann() {
  rkhs::SplitMix64 rng(kSeed + 4);
  double series = 0.0;
  for (int i = 0; i < 40; ++i) {
    rkhs::BargmannDirichletParams params;
    params.theta = rng.uniform(0.3, 3.0);
    params.beta0 = rng.uniform(-0.9, 0.0);
    params.p = rng.integer(0, 3);
    params.m = rng.integer(0, 3);
    const complex xi = random_xi(rng, 2.5);
    series = std::max(series, relative(rkhs::bargmann_kernel(xi, params),
                                       rkhs::bargmann_kernel_series(xi, params)));
  }
  double exponential = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double theta = rng.uniform(0.5, 2.0);
    const complex xi = random_xi(rng, 3.0);
    exponential = std::max(exponential, relative(rkhs::bargmann_kernel(xi, {theta, 0.0, 0, 0}),
                                                 std::exp(theta * xi)));
  }
  Outcome out;
  out.measured = std::max(series / 1e-9, exponential / 1e-12);
  out.tolerance = 1.0;
  out.passed = series <= 1e-9 && exponential <= 1e-12;
  out.detail = "series " + fmt("%.2e", series) + " (tol 1e-9), exp " + fmt("%.2e", exponential) +
               " (tol 1e-12)";
  return out;
}

Outcome c05_bargmann_limit() {
  bool all = true;
  double worst = 0.0;
  int count = 0;
  for (double beta0 : {0.0, -0.5}) {
    for (int p : {0, 2}) {
      for (int m : {0, 1}) {
        for (complex xi : {complex(0.3, 0.0), complex(0.5, 0.2)}) {
          const auto r = rkhs::check_limit(rkhs::LimitKind::bargmann, xi, {1.0, beta0, p, m},
                                           {5, 10, 20, 40, 100}, 1e-2);
          all &= r.passed;
          worst = std::max(worst, r.measured_error);
          ++count;
        }
      }
    }
  }
  Outcome out = finish(worst, 1e-2, std::to_string(count) + " scans, strictly decreasing");
  out.passed = out.passed && all;
  return out;
}

Outcome c06_hardy_limit() {
  bool all = true;
  double worst = 0.0;
  const std::vector<std::pair<rkhs::LimitParams, complex>> cases = {
      {{1.0, 0.0, 1, 0}, 0.5},
      {{1.0, -0.5, 0, 0}, {0.3, 0.4}},
      {{1.0, -0.25, 2, 1}, {-0.5, 0.2}},
      {{1.0, 0.0, 0, 2}, 0.6}};
  for (const auto& [params, xi] : cases) {
    const auto r = rkhs::check_limit(rkhs::LimitKind::hardy, xi, params, {-0.9, -0.99, -0.999});
    all &= r.passed;
    worst = std::max(worst, r.measured_error);
  }
  const double exact = std::abs(rkhs::hardy_kernel(0.5, {0.0, 1, 0}) - 4.0);
  Outcome out = finish(worst, 1e-2, "H(0.5) - 4 = " + fmt("%.2e", exact) + " (tol 1e-12)");
  out.passed = out.passed && all && exact <= 1e-12;
  return out;
}

Outcome c07_hardy_norm_limit() {
  rkhs::SplitMix64 rng(kSeed + 7);
  bool decreasing = true;
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double beta0 = rng.uniform(-0.9, 0.0);
    const int p = rng.integer(0, 2);
    const rkhs::LaurentSeries f = rkhs::random_series(rng, -p, rng.integer(1, 15));
    const rkhs::HardyDirichletParams hardy{beta0, p, 0};
    const double target = rkhs::dirichlet_norm(f, hardy);
    double previous = INFINITY;
    double gap = 0.0;
    for (double alpha : {-0.9, -0.99, -0.999}) {
      const rkhs::BergmanDirichletParams a2{alpha, beta0, p, 1.0, 0};
      gap = std::abs(rkhs::dirichlet_norm(f, a2) - target) / target;
      decreasing &= gap < previous;
      previous = gap;
    }
    worst = std::max(worst, gap);
  }
  Outcome out = finish(worst, 1e-2, decreasing ? "gaps strictly decrease" : "gaps not monotone");
  out.passed = out.passed && decreasing;
  return out;
}

Outcome c08_disk_identities() {
  rkhs::SplitMix64 rng(kSeed + 8);
  std::vector<complex> points;
  for (int i = 0; i < 5; ++i) points.push_back(random_xi(rng, 0.8));
  std::string detail;
  double worst = 0.0;
  for (auto kind : {rkhs::IdentityKind::disk_full, rkhs::IdentityKind::disk_even, rkhs::IdentityKind::disk_odd,
                    rkhs::IdentityKind::disk_even_odd}) {
    double kind_worst = 0.0;
    for (const rkhs::FamilyParams& params :
         {rkhs::FamilyParams{0.5, 1.0, -0.25}, rkhs::FamilyParams{2.0, 1.0, 0.0}}) {
      for (int p = 0; p <= 2; ++p) {
        for (int q = 0; q <= 2; ++q) {
          const auto r = rkhs::check_identity(kind, p, q, params, points,
                                              rkhs::IdentityMode::assert_equal, 1e-10);
          kind_worst = std::max(kind_worst, r.measured_error);
        }
      }
    }
    worst = std::max(worst, kind_worst);
    detail += std::string(detail.empty() ? "" : ", ") + std::string(rkhs::to_string(kind)) + " " +
              fmt("%.2e", kind_worst);
  }
  return finish(worst, 1e-10, detail);
}

std::vector<std::vector<complex>> random_vectors(rkhs::SplitMix64& rng, int count,
                                                 rkhs::TransformKind kind, bool mixed = false) {
  std::vector<std::vector<complex>> vectors;
  for (int i = 0; i < count; ++i) {
    std::vector<complex> a(rng.integer(1, 21));
    for (std::size_t k = 0; k < a.size(); ++k) {
      const bool even = k % 2 == 0;
      bool keep = true;
      if (!mixed) {
        if (kind == rkhs::TransformKind::even_even || kind == rkhs::TransformKind::even_odd) {
          keep = even;
        } else if (kind == rkhs::TransformKind::odd_odd) {
          keep = !even;
        }
      }
      if (keep) a[k] = rng.unit_square();
    }
    vectors.push_back(std::move(a));
  }
  return vectors;
}

Outcome c09_isometry() {
  rkhs::SplitMix64 rng(kSeed + 9);
  using K = rkhs::TransformKind;
  std::vector<rkhs::TransformSpec> specs;
  const rkhs::FamilyParams params{0.5, 1.5, -0.25};
  for (K kind : {K::full, K::even_even, K::odd_odd, K::even_odd, K::involution}) {
    specs.push_back({rkhs::Family::disk, kind, 1, kind == K::involution ? 1 : 2, params});
  }
  for (K kind : {K::full, K::even_even, K::odd_odd}) {
    specs.push_back({rkhs::Family::fock, kind, 2, 0, params});
  }
  double coeff = 0.0;
  double quad = 0.0;
  for (const auto& spec : specs) {
    const auto vectors = random_vectors(rng, 50, spec.kind);
    coeff = std::max(coeff, rkhs::check_isometry_coeff(spec, vectors).measured_error);
    const std::vector<std::vector<complex>> five(vectors.begin(), vectors.begin() + 5);
    quad = std::max(quad, rkhs::check_isometry_quadrature(spec, five).measured_error);
  }
  Outcome out;
  out.measured = std::max(coeff / 1e-12, quad / 1e-7);
  out.tolerance = 1.0;
  out.passed = coeff <= 1e-12 && quad <= 1e-7;
  out.detail = "coefficient " + fmt("%.2e", coeff) + " (tol 1e-12), quadrature " +
               fmt("%.2e", quad) + " (tol 1e-7), 8 transforms";
  return out;
}

Outcome c10_involution() {
  rkhs::SplitMix64 rng(kSeed + 10);
  double worst = 0.0;
  for (rkhs::Family family : {rkhs::Family::disk, rkhs::Family::fock}) {
    const rkhs::TransformSpec spec{family, rkhs::TransformKind::involution, 2, 2,
                                   {0.5, 1.5, -0.25}};
    const auto r = rkhs::check_involution(
        spec, random_vectors(rng, 20, rkhs::TransformKind::involution, true));
    worst = std::max(worst, r.measured_error);
  }
  return finish(worst, 0.0, "20 mixed-parity vectors per family, exact");
}

Outcome c11_reproducing() {
  rkhs::SplitMix64 rng(kSeed + 11);
  double coeff = 0.0;
  double quad = 0.0;
  int laurent = 0;
  for (int family = 0; family < 3; ++family) {
    for (int i = 0; i < 20; ++i) {
      const double beta0 = rng.uniform(-0.9, 0.0);
      const int p = rng.integer(0, 3);
      const int m = rng.integer(0, 2);
      rkhs::SpaceParams space;
      double reach = 0.8;
      if (family == 0) {
        const double R = rng.uniform(0.6, 1.6);
        space = rkhs::BergmanDirichletParams{rng.uniform(-0.5, 2.5), beta0, p, R, m};
        reach = 0.8 * R;
      } else if (family == 1) {
        space = rkhs::BargmannDirichletParams{rng.uniform(0.5, 2.0), beta0, p, m};
        reach = 1.0;
      } else {
        space = rkhs::HardyDirichletParams{beta0, p, m};
      }
      const int lo = rkhs::min_index(space);
      laurent += lo < 0;
      const rkhs::LaurentSeries f = rkhs::random_series(rng, lo, lo + rng.integer(3, 15));
      const complex w = random_xi(rng, reach);
      coeff = std::max(coeff, rkhs::check_reproducing(space, f, w).measured_error);

      std::visit([](auto& s) { s.m = 0; }, space);
      const rkhs::LaurentSeries g = rkhs::random_series(rng, rkhs::min_index(space), 12);
      quad = std::max(quad, rkhs::check_reproducing(space, g, w, rkhs::InnerProductPath::quadrature)
                                .measured_error);
    }
  }
  Outcome out;
  out.measured = std::max(coeff / 1e-8, quad / 1e-6);
  out.tolerance = 1.0;
  out.passed = coeff <= 1e-8 && quad <= 1e-6;
  out.detail = "coefficient " + fmt("%.2e", coeff) + " (tol 1e-8), quadrature " +
               fmt("%.2e", quad) + " (tol 1e-6), " + std::to_string(laurent) +
               " Laurent-regime samples";
  return out;
}

Outcome c12_norm_comparison() {
  rkhs::SplitMix64 rng(kSeed + 12);
  double worst = -INFINITY;
  for (int i = 0; i < 50; ++i) {
    const double alpha = rng.uniform(-0.5, 3.0);
    const double beta0 = rng.uniform(-0.9, 0.0);
    const int p = rng.integer(0, 3);
    const int m = rng.integer(0, 3);
    const double R = rng.uniform(0.5, 2.0);
    const rkhs::BergmanDirichletParams dm{alpha, beta0, p, R, m};
    const rkhs::BergmanDirichletParams a2{alpha, beta0, p, R, 0};
    const rkhs::LaurentSeries f = rkhs::random_series(rng, dm.min_index(), rng.integer(2, 20));
    const double lhs = rkhs::dirichlet_norm(f, a2);
    const double rhs = std::max(1.0, std::pow(R, m)) * rkhs::dirichlet_norm(f, dm);
    worst = std::max(worst, (lhs - rhs) / rhs);
  }
  return finish(worst, 1e-12, "max (lhs - rhs) / rhs over 50 series");
}

Outcome c13_duplication() {
  double worst = 0.0;
  for (int i = 1; i < 50; ++i) {
    const double a = 5.0 * i / 50.0;
    for (int n = 0; n <= 30; ++n) {
      const double even = std::pow(4.0, n) * rkhs::pochhammer(a / 2, n) *
                          rkhs::pochhammer((a + 1) / 2, n);
      const double odd = 2.0 * std::pow(4.0, n) * rkhs::pochhammer(a / 2, n + 1) *
                         rkhs::pochhammer((a + 1) / 2, n);
      worst = std::max(worst, std::abs(rkhs::pochhammer(a, 2 * n) - even) / even);
      worst = std::max(worst, std::abs(rkhs::pochhammer(a, 2 * n + 1) - odd) / odd);
    }
  }
  return finish(worst, 1e-12, "(a)_2n and (a)_2n+1 for 49 values of a, n <= 30");
}

Outcome c14_fock_identities() {
  rkhs::SplitMix64 rng(kSeed + 14);
  std::vector<complex> points;
  for (int i = 0; i < 5; ++i) points.push_back(random_xi(rng, 2.0));
  const rkhs::FamilyParams params{0.0, 1.5, -0.25};
  double agree = 0.0;
  int reported = 0;
  int detected = 0;
  for (int p = 0; p <= 2; ++p) {
    for (int q = 0; q <= 2; ++q) {
      for (auto kind : {rkhs::IdentityKind::fock_full, rkhs::IdentityKind::fock_even}) {
        agree = std::max(agree, rkhs::check_identity(kind, p, q, params, points,
                                                     rkhs::IdentityMode::assert_equal, 1e-10)
                                    .measured_error);
      }
      for (auto kind : {rkhs::IdentityKind::fock_odd, rkhs::IdentityKind::fock_even_odd}) {
        const auto r = rkhs::check_identity(kind, p, q, params, points, rkhs::IdentityMode::detect);
        ++reported;
        if (r.passed && !std::get<bool>(*r.find("identity_holds"))) ++detected;
      }
    }
  }
  Outcome out = finish(agree, 1e-10,
                       "fock_full/fock_even " + fmt("%.2e", agree) + "; fock_odd/fock_even_odd disagreement reported " +
                           std::to_string(detected) + "/" + std::to_string(reported));
  out.passed = out.passed && detected == reported;
  return out;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "monomial norms vs quadrature", c01_norms},
      {2, "Bergman-Dirichlet kernel closed form vs series", c02_bergman_closed_form},
      {3, "m=0 Bergman kernel: three forms agree", c03_m0_forms},
      {4, "Bargmann-Dirichlet kernel closed form vs series", c04_bargmann},
      {5, "Bergman -> Bargmann limit as R grows", c05_bargmann_limit},
      {6, "Bergman -> Hardy limit as alpha -> -1", c06_hardy_limit},
      {7, "weighted Bergman norm -> Hardy norm", c07_hardy_norm_limit},
      {8, "disk series identities (even, odd, even-odd)", c08_disk_identities},
      {9, "transform isometry", c09_isometry},
      {10, "involution squares to identity", c10_involution},
      {11, "reproducing property", c11_reproducing},
      {12, "norm comparison inequality", c12_norm_comparison},
      {13, "Pochhammer duplication", c13_duplication},
      {14, "Fock series identities and disagreement reports", c14_fock_identities},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  bool all = true;
  bool ran = false;
  for (const Criterion& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    ran = true;
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.passed = false;
      out.measured = INFINITY;
      out.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] C%02d %s: measured=%.3e tolerance=%.1e; %s\n", out.passed ? "PASS" : "FAIL",
                c.id, c.title, out.measured, out.tolerance, out.detail.c_str());
    all &= out.passed;
  }
  if (!ran) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  return all ? 0 : 1;
}
