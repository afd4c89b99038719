#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "bicoeff/caratheodory.hpp"
#include "bicoeff/class_bounds.hpp"
#include "bicoeff/power_series.hpp"

namespace bicoeff {

/// Coefficient functionals extracted from the two-sided subordination systems.
/// Each id names one fixed linear-plus-quadratic expression in (p1, p2, q1,
/// q2); see functional_value. The token names are the report vocabulary used
/// by the verifier and are kept opaque on purpose.
enum class Functional {
  Eq17a,   // a2^2, weighted-derivative class (uses lambda)
  Eq19,    // a2^2, starlike class, linear route
  Eq19_1,  // a2^2, starlike class, q-augmented route
  Eq19_10, // a2^2, starlike class, resolved route (denominator b1^2+b1-b2)
  Eq19_31, // a3,   starlike class, q-augmented route
  Eq19_33, // a3,   starlike class, direct route
  Eq19_12, // a2^2, convex class
  Eq19_32, // a3,   convex class, direct route
  Eq19_42, // a3,   convex class, difference route
  Eq7,     // a2^2, mixed convex/derivative class
  Eq8,     // a3,   mixed convex/derivative class
  Teq7,    // a2^2, mixed starlike/derivative class
  Teq8,    // a3,   mixed starlike/derivative class
  Te7,     // a2^2, mixed starlike/convex class
  Te8,     // a3,   mixed starlike/convex class
  KeoghMerkes,  // p2 - v p1^2 (parameterized; ignores b1, b2, q)
};

const char* to_string(Functional fn);
std::optional<Functional> functional_from_string(std::string_view token);

/// What quantity a functional isolates.
enum class FunctionalTarget { A2Sq, A3, KeoghMerkes };
FunctionalTarget functional_target(Functional fn);

/// A functional plus its parameter (only KeoghMerkes has one).
struct FunctionalId {
  Functional fn = Functional::Eq19;
  Complex v{};

  static FunctionalId of(Functional f) { return FunctionalId{f, Complex{}}; }
  static FunctionalId keogh_merkes(Complex v) {
    return FunctionalId{Functional::KeoghMerkes, v};
  }
};

/// First two coefficients of each side of a subordination pair.
struct CoeffTuple {
  Complex p1{}, p2{}, q1{}, q2{};
};

/// Evaluates the functional at a coefficient tuple. lambda only affects
/// Eq17a; b1/b2 scale every functional except KeoghMerkes.
Complex functional_value(const FunctionalId& id, double lambda, double b1,
                         double b2, const CoeffTuple& t);

/// Term-by-term triangle-inequality maximum of the functional over the box
/// |p1|,|p2|,|q1|,|q2| <= 2: every additive term is maximized independently
/// (coefficient modulus times 2, 4, or 16 depending on the monomial). This is
/// the analytic bound the closed forms come from; it may exceed the best value
/// any single tuple attains when one variable appears in several terms.
double triangle_bound(const FunctionalId& id, double lambda, double b1,
                      double b2);

/// phi(r(z)) for the Schwarz transform r of p, truncated to
/// min(phi.order, p.count). phi must have constant term 1 (ParameterError);
/// p must be box-feasible (FeasibilityError via the transform).
PowerSeries subordination_expand(const PowerSeries& phi,
                                 const CaratheodoryCoeffs& p);

/// a2 and a3 solved from the function-side linear relations of the class.
/// `consistent` reports whether the inverse-side linear relation holds for
/// the same a2 (within 1e-12), which pins q1 = -consistency_scale(kind) * p1.
struct SolveResult {
  Complex a2{};
  Complex a3{};
  bool consistent = false;
};

SolveResult solve_class_coefficients(const ClassSpec& spec, double b1,
                                     double b2, const CaratheodoryCoeffs& p,
                                     const CaratheodoryCoeffs& q);

/// Ratio s with q1 = -s * p1 at any consistent pair of the class.
double consistency_scale(BoundClass kind);

/// Outcome of maximize_functional. max_modulus is always attained: argmax is
/// feasible for `mode` and re-evaluates to max_modulus exactly. The three
/// stream values break the search down:
///   triangle_value:   the analytic term-by-term bound (see triangle_bound);
///   alignment_value:  best attained value among the analytic phase-aligned
///                     candidates (box) or the structured extremal-measure
///                     candidates (tight);
///   stochastic_value: best attained value using only seeded random sampling
///                     plus deterministic coordinate refinement.
/// budget counts functional evaluations actually performed.
struct ExtremalResult {
  double max_modulus = 0.0;
  CoeffTuple argmax{};
  FeasibilityMode mode = FeasibilityMode::Box;
  long long budget = 0;
  std::uint64_t seed = 0;
  double triangle_value = 0.0;
  double alignment_value = 0.0;
  double stochastic_value = 0.0;
};

/// Maximizes |functional| over tuples feasible for `mode`.
///   Box:   each coefficient ranges over the disk |.| <= 2 independently.
///   Tight: each side (p1, p2) / (q1, q2) ranges over moment pairs of genuine
///          boundary measures.
/// `budget` >= 1 is the random-sample allowance; candidate i draws its own
/// generator from derive_seed(seed, i), so results are reproducible and
/// independent of evaluation order.
ExtremalResult maximize_functional(const FunctionalId& id, double lambda,
                                   double b1, double b2, FeasibilityMode mode,
                                   long long budget, std::uint64_t seed);

/// Samples a tight-feasible pair (p, q) with q1 = -scale * p1 exactly, for
/// soundness sweeps against class bounds. scale must be 1 or 2 (the two
/// consistency scales); count >= 2 coefficients per side.
std::pair<CaratheodoryCoeffs, CaratheodoryCoeffs> sample_joint_pair(
    double scale, int count, std::uint64_t seed);

}  // namespace bicoeff
