#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bicoeff/power_series.hpp"

namespace bicoeff {

/// Initial coefficients p1..pK of a function p(z) = 1 + p1 z + p2 z^2 + ...
/// with positive real part on the unit disk. p[0] holds p1.
struct CaratheodoryCoeffs {
  std::vector<Complex> p;

  int count() const { return static_cast<int>(p.size()); }

  /// 1-based accessor: coeff(1) == p1.
  Complex coeff(int i) const { return p[static_cast<size_t>(i - 1)]; }
};

/// Initial coefficients r1..rK of a Schwarz function r(z) = r1 z + r2 z^2 + ...
/// (analytic self-map of the disk fixing 0). r[0] holds r1.
struct SchwarzCoeffs {
  std::vector<Complex> r;

  int count() const { return static_cast<int>(r.size()); }
  Complex coeff(int i) const { return r[static_cast<size_t>(i - 1)]; }
};

/// Which necessary conditions a coefficient tuple is checked against.
///  Box:   |p_i| <= 2 for every i.
///  Tight: the box, plus |p2 - p1^2/2| <= 2 - |p1|^2 / 2.
/// Tight implies box; every tuple coming from an actual positive-real-part
/// function satisfies both.
enum class FeasibilityMode { Box, Tight };

/// Checks the conditions of `mode` with an absolute slack `tol` on each
/// inequality. Tuples with fewer than two coefficients only get the box check.
bool validate_caratheodory(const CaratheodoryCoeffs& c, FeasibilityMode mode,
                           double tol = 1e-9);

/// Coefficients of r = (p - 1) / (p + 1), the Schwarz function subordinating
/// p to (1+z)/(1-z). Input must be box-feasible (FeasibilityError otherwise);
/// output has the same count.
SchwarzCoeffs schwarz_from_caratheodory(const CaratheodoryCoeffs& c);

/// Inverse transform p = (1 + r) / (1 - r). Requires |r1| <= 1
/// (FeasibilityError otherwise).
CaratheodoryCoeffs caratheodory_from_schwarz(const SchwarzCoeffs& s);

/// Moments of a discrete boundary measure: p_i = 2 * sum_j w_j x_j^i for
/// unimodular points x_j and nonnegative weights w_j summing to 1. Weights are
/// renormalized if their sum drifts from 1; negative weights or |x_j| != 1
/// (beyond 1e-12) raise ParameterError. Every tuple produced this way is
/// tight-feasible: these are exactly the coefficient tuples of genuine
/// positive-real-part functions.
CaratheodoryCoeffs herglotz_coeffs(std::span<const double> weights,
                                   std::span<const Complex> points, int count);

/// Draws a random discrete measure (`atoms` >= 1 points, simplex weights,
/// uniform angles) and returns its first `count` moments. Deterministic in
/// `seed`; distinct seeds give decorrelated draws.
CaratheodoryCoeffs sample_caratheodory(int atoms, int count, std::uint64_t seed);

/// Like sample_caratheodory, but the returned tuple has p1 equal to `target`
/// exactly. Requires |target| <= 2. The sample is a random mixture of a free
/// measure and a two-point correction chosen so the first moment lands on
/// target/2; the result is still the moment sequence of a genuine measure.
CaratheodoryCoeffs sample_caratheodory_with_p1(Complex target, int count,
                                               std::uint64_t seed);

}  // namespace bicoeff
