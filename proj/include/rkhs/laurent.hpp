#pragma once

#include <complex>
#include <span>
#include <vector>

#include "rkhs/specfun.hpp"

namespace rkhs {

/// Finite Laurent sum sum_{n=min_index}^{max_index} a_n z^n.
///
/// Coefficient a_n is stored at position n - min_index. Indices outside the
/// stored range read as zero.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  LaurentSeries(int min_index, std::vector<complex> coefficients);

  static LaurentSeries monomial(int n, complex coefficient = 1.0);

  int min_index() const { return min_index_; }
  /// min_index() - 1 for the empty series.
  int max_index() const {
    return min_index_ + static_cast<int>(coefficients_.size()) - 1;
  }
  bool empty() const { return coefficients_.empty(); }
  std::span<const complex> coefficients() const { return coefficients_; }

  complex operator[](int n) const;
  void set(int n, complex value);

  /// Horner evaluation; DomainError at z = 0 when negative powers are present.
  complex evaluate(complex z) const;
  complex operator()(complex z) const { return evaluate(z); }

  /// Exact k-th derivative on coefficients: a_n z^n -> n(n-1)...(n-k+1) a_n z^{n-k}.
  LaurentSeries derivative(int order = 1) const;

  /// Coefficients restricted to [lo, hi] (min_index kept at lo).
  LaurentSeries slice(int lo, int hi) const;

  LaurentSeries& operator+=(const LaurentSeries& other);
  LaurentSeries& operator*=(complex scale);

  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) {
    return a += b;
  }
  friend LaurentSeries operator*(complex s, LaurentSeries a) { return a *= s; }
  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

 private:
  int min_index_ = 0;
  std::vector<complex> coefficients_;
};

}  // namespace rkhs
