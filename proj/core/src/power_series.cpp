#include "bicoeff/power_series.hpp"

#include <string>

#include "bicoeff/errors.hpp"

namespace bicoeff {

namespace {

void check_order(int order) {
  if (order < 1) {
    throw ParameterError("power series order must be >= 1, got " +
                         std::to_string(order));
  }
}

}  // namespace

PowerSeries::PowerSeries(int order) {
  check_order(order);
  coeffs_.assign(static_cast<size_t>(order) + 1, Complex{});
}

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  check_order(static_cast<int>(coeffs_.size()) - 1);
}

PowerSeries PowerSeries::identity(int order) {
  PowerSeries s(order);
  s[1] = 1.0;
  return s;
}

PowerSeries PowerSeries::normalized(std::span<const Complex> tail, int order) {
  PowerSeries s(order);
  s[1] = 1.0;
  for (int k = 2; k <= order; ++k) {
    const size_t i = static_cast<size_t>(k - 2);
    if (i >= tail.size()) break;
    s[k] = tail[i];
  }
  return s;
}

bool PowerSeries::is_normalized() const {
  return coeffs_[0] == Complex{} && coeffs_[1] == Complex{1.0};
}

PowerSeries PowerSeries::truncated(int new_order) const {
  check_order(new_order);
  std::vector<Complex> c(static_cast<size_t>(new_order) + 1, Complex{});
  const size_t n = std::min(c.size(), coeffs_.size());
  for (size_t i = 0; i < n; ++i) c[i] = coeffs_[i];
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::derivative() const {
  const int n = order();
  PowerSeries d(n > 1 ? n - 1 : 1);
  for (int k = 1; k <= n; ++k) d[k - 1] = static_cast<double>(k) * (*this)[k];
  if (n == 1) d[1] = 0.0;
  return d;
}

PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order()) {
    throw OrderMismatchError("mul: order " + std::to_string(a.order()) +
                             " vs " + std::to_string(b.order()));
  }
  const int n = a.order();
  PowerSeries out(n);
  for (int k = 0; k <= n; ++k) {
    Complex acc{};
    for (int j = 0; j <= k; ++j) acc += a[j] * b[k - j];
    out[k] = acc;
  }
  return out;
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
  if (outer.order() != inner.order()) {
    throw OrderMismatchError("compose: order " + std::to_string(outer.order()) +
                             " vs " + std::to_string(inner.order()));
  }
  if (inner[0] != Complex{}) {
    throw CompositionDomainError(
        "compose: inner series must have zero constant term");
  }
  // Horner evaluation in the truncated algebra. Because inner has no constant
  // term, truncation loses nothing below the cutoff degree.
  const int n = outer.order();
  PowerSeries acc(n);
  acc[0] = outer[n];
  for (int k = n - 1; k >= 0; --k) {
    acc = mul(acc, inner);
    acc[0] += outer[k];
  }
  return acc;
}

PowerSeries reciprocal(const PowerSeries& a) {
  if (a[0] == Complex{}) {
    throw ParameterError("reciprocal: constant term must be nonzero");
  }
  const int n = a.order();
  PowerSeries out(n);
  out[0] = 1.0 / a[0];
  for (int k = 1; k <= n; ++k) {
    Complex acc{};
    for (int j = 1; j <= k; ++j) acc += a[j] * out[k - j];
    out[k] = -acc / a[0];
  }
  return out;
}

PowerSeries revert(const PowerSeries& f) {
  if (!f.is_normalized()) {
    throw NormalizationError("revert: series must be z + c2 z^2 + ...");
  }
  const int n = f.order();
  PowerSeries inv = PowerSeries::identity(n);
  for (int k = 2; k <= n; ++k) {
    // With coefficients 2..k-1 already fixed and coefficient k still zero,
    // compose(inv, f) is correct below degree k; subtracting the degree-k
    // residue fixes coefficient k for good.
    inv[k] = -compose(inv, f)[k];
  }
  return inv;
}

}  // namespace bicoeff
