#pragma once

#include <complex>
#include <span>
#include <vector>

namespace bicoeff {

using Complex = std::complex<double>;

// Truncation order used throughout the toolkit when nothing else is asked for.
inline constexpr int kDefaultOrder = 8;

/// Truncated Taylor series c0 + c1 z + ... + cN z^N over std::complex<double>.
///
/// The order N is part of the value: arithmetic requires equal orders and
/// truncates results back to that order, so a PowerSeries never silently grows.
/// All operations return new values; shared instances are safe to read
/// concurrently.
class PowerSeries {
 public:
  /// Zero series of the given truncation order (order >= 1).
  explicit PowerSeries(int order);

  /// Takes the coefficients as given; order = coeffs.size() - 1 (>= 1).
  explicit PowerSeries(std::vector<Complex> coeffs);

  /// The series z, truncated at `order`.
  static PowerSeries identity(int order);

  /// z + tail[0] z^2 + tail[1] z^3 + ..., zero-padded or truncated to `order`.
  /// The constant and linear coefficients are exactly 0 and 1.
  static PowerSeries normalized(std::span<const Complex> tail, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  Complex operator[](int k) const { return coeffs_[static_cast<size_t>(k)]; }
  Complex& operator[](int k) { return coeffs_[static_cast<size_t>(k)]; }

  /// True when c0 == 0 and c1 == 1 exactly. Reversion requires this shape and
  /// produces it, so the flag survives round trips without tolerance games.
  bool is_normalized() const;

  /// Copy truncated (or zero-extended) to a new order >= 1.
  PowerSeries truncated(int new_order) const;

  /// Termwise derivative, truncated to order max(order-1, 1).
  PowerSeries derivative() const;

 private:
  std::vector<Complex> coeffs_;
};

/// Cauchy product truncated to the common order.
/// Throws OrderMismatchError when the orders differ.
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);

inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  return mul(a, b);
}

/// outer(inner(z)) truncated to the common order. The inner series must have
/// a vanishing constant term (CompositionDomainError otherwise), which is what
/// makes truncated composition exact degree by degree.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

/// 1 / a for a series with nonzero constant term (ParameterError otherwise).
PowerSeries reciprocal(const PowerSeries& a);

/// Compositional inverse F of a normalized series f, i.e. F(f(z)) = z up to
/// the truncation order. Throws NormalizationError unless f.is_normalized().
/// Computed by triangular elimination: coefficient k of F is fixed so that
/// compose(F, f) has zero coefficient at degree k, which later degrees cannot
/// disturb.
PowerSeries revert(const PowerSeries& f);

}  // namespace bicoeff
