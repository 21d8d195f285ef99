#include "rkhs/laurent.hpp"

#include <algorithm>

namespace rkhs {

LaurentSeries::LaurentSeries(int min_index, std::vector<complex> coefficients)
    : min_index_(min_index), coefficients_(std::move(coefficients)) {}

LaurentSeries LaurentSeries::monomial(int n, complex coefficient) {
  return LaurentSeries(n, {coefficient});
}

complex LaurentSeries::operator[](int n) const {
  if (n < min_index_ || n > max_index()) return 0.0;
  return coefficients_[n - min_index_];
}

void LaurentSeries::set(int n, complex value) {
  if (coefficients_.empty()) {
    min_index_ = n;
    coefficients_.push_back(value);
    return;
  }
  if (n < min_index_) {
    coefficients_.insert(coefficients_.begin(), min_index_ - n, complex(0.0));
    min_index_ = n;
  } else if (n > max_index()) {
    coefficients_.resize(n - min_index_ + 1, complex(0.0));
  }
  coefficients_[n - min_index_] = value;
}

complex LaurentSeries::evaluate(complex z) const {
  if (coefficients_.empty()) return 0.0;
  if (z == complex(0.0)) {
    for (int n = min_index_; n < 0 && n <= max_index(); ++n) {
      if ((*this)[n] != complex(0.0)) {
        throw DomainError("LaurentSeries::evaluate: negative powers at z = 0");
      }
    }
    return (*this)[0];
  }
  complex acc(0.0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc * ipow(z, min_index_);
}

LaurentSeries LaurentSeries::derivative(int order) const {
  if (order < 0) throw DomainError("LaurentSeries::derivative: negative order");
  if (order == 0 || coefficients_.empty()) return *this;
  std::vector<complex> out(coefficients_.size());
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    const int n = min_index_ + static_cast<int>(i);
    double factor = 1.0;
    for (int k = 0; k < order; ++k) factor *= n - k;
    out[i] = factor * coefficients_[i];
  }
  return LaurentSeries(min_index_ - order, std::move(out));
}

LaurentSeries LaurentSeries::slice(int lo, int hi) const {
  if (hi < lo) return LaurentSeries(lo, {});
  std::vector<complex> out(hi - lo + 1);
  for (int n = lo; n <= hi; ++n) out[n - lo] = (*this)[n];
  return LaurentSeries(lo, std::move(out));
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& other) {
  if (other.empty()) return *this;
  if (empty()) return *this = other;
  const int lo = std::min(min_index_, other.min_index_);
  const int hi = std::max(max_index(), other.max_index());
  std::vector<complex> out(hi - lo + 1);
  for (int n = lo; n <= hi; ++n) out[n - lo] = (*this)[n] + other[n];
  min_index_ = lo;
  coefficients_ = std::move(out);
  return *this;
}

LaurentSeries& LaurentSeries::operator*=(complex scale) {
  for (auto& c : coefficients_) c *= scale;
  return *this;
}

}  // namespace rkhs
