#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bicoeff/power_series.hpp"

namespace bicoeff {

/// Target functions phi(z) = 1 + B1 z + B2 z^2 + ... with B1 > 0 that the
/// subordination machinery compares against. Only B1 and B2 enter the closed
/// form bounds; higher coefficients are exposed for the series tooling.
class MaMindaPhi {
 public:
  enum class Family { Janowski, OrderBeta, StronglyStarlike, Custom };

  /// (1 + A z) / (1 + B z) with -1 <= B < A <= 1.
  static MaMindaPhi janowski(double a, double b);

  /// (1 + (1 - 2 beta) z) / (1 - z) with 0 <= beta < 1, i.e. B_k = 2(1 - beta).
  static MaMindaPhi order_beta(double beta);

  /// ((1 + z) / (1 - z))^alpha with 0 < alpha <= 1.
  static MaMindaPhi strongly_starlike(double alpha);

  /// Explicit leading coefficients B1, B2, ... (B1 > 0); zeros beyond the list.
  static MaMindaPhi custom(std::vector<double> b);

  Family family() const { return family_; }
  double b1() const { return b_[0]; }
  double b2() const { return b_.size() > 1 ? b_[1] : 0.0; }
  double b3() const { return b_.size() > 2 ? b_[2] : 0.0; }

  /// 1 + B1 z + ... + B_order z^order.
  PowerSeries coefficients(int order) const;

  /// Canonical flag syntax for this function, e.g. "beta:0.25".
  std::string describe() const;

 private:
  MaMindaPhi() = default;

  Family family_ = Family::Custom;
  std::vector<double> b_;  // custom: the full list; else a short leading cache
  std::string describe_;
  double param_a_ = 0.0;  // janowski A / beta / alpha, per family
  double param_b_ = 0.0;  // janowski B
};

/// Parses the CLI syntax "janowski:A,B" | "beta:X" | "alpha:X" |
/// "custom:B1,B2,...". Malformed syntax raises UsageError; well-formed input
/// with out-of-range values raises ParameterError from the factory.
MaMindaPhi parse_phi(std::string_view text);

}  // namespace bicoeff
