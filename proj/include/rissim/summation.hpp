// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <span>

namespace rissim {

/// Kahan-Babuska (Neumaier) accumulator. The running error is carried
/// separately and folded in on read, so order of additions is the only input
/// that affects the result.
template <typename Real>
class NeumaierSum {
public:
  constexpr NeumaierSum& operator+=(Real value) noexcept {
    const Real t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value))
      compensation_ += (sum_ - t) + value;
    else
      compensation_ += (value - t) + sum_;
    sum_ = t;
    return *this;
  }

  [[nodiscard]] constexpr Real value() const noexcept { return sum_ + compensation_; }

private:
  Real sum_{0};
  Real compensation_{0};
};

/// Component-wise compensated accumulation of complex phasors.
template <typename Real>
class ComplexNeumaierSum {
public:
  constexpr ComplexNeumaierSum& operator+=(const std::complex<Real>& z) noexcept {
    re_ += z.real();
    im_ += z.imag();
    return *this;
  }

  [[nodiscard]] constexpr std::complex<Real> value() const noexcept { return {re_.value(), im_.value()}; }

private:
  NeumaierSum<Real> re_;
  NeumaierSum<Real> im_;
};

enum class SummationMode { naive, compensated };

/// Index-ordered sum of `terms`.
template <typename Real>
std::complex<Real> sum_terms(std::span<const std::complex<Real>> terms, SummationMode mode) noexcept {
  if (mode == SummationMode::compensated) {
    ComplexNeumaierSum<Real> acc;
    for (const auto& t : terms) acc += t;
    return acc.value();
  }
  std::complex<Real> acc{0, 0};
  for (const auto& t : terms) acc += t;
  return acc;
}

}  // namespace rissim
