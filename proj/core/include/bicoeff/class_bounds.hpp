#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bicoeff {

/// The six function classes the toolkit knows closed-form coefficient bounds
/// for. All are defined by subordination of a first-derivative or log-derivative
/// expression to a target phi on both the function and its inverse.
enum class BoundClass {
  RSigma,        // (1-lambda) f/z + lambda f'  subordinate to phi, both ways
  SstarSigma,    // z f'/f subordinate to phi, both ways
  KSigma,        // 1 + z f''/f' subordinate to phi, both ways
  MixedKR,       // convex on the function side, derivative on the inverse side
  MixedSstarR,   // starlike on the function side, derivative on the inverse
  MixedSstarK,   // starlike on the function side, convex on the inverse
};

const char* to_string(BoundClass kind);
std::optional<BoundClass> bound_class_from_string(std::string_view token);

/// Class selector plus the weight used by RSigma (ignored elsewhere).
struct ClassSpec {
  BoundClass kind = BoundClass::RSigma;
  double lambda = 0.0;  // >= 0
};

/// One alternative estimate inside a bound; the reported bound is the
/// smallest branch. Labels name the coefficient relation the branch comes
/// from, matching the functional ids used by the verifier.
struct BoundBranch {
  std::string label;
  double value = 0.0;
};

/// Closed-form estimates for |a2| and |a3|. A missing optional means the
/// class has no closed-form bound for that coefficient; the report never
/// substitutes infinity.
struct BoundReport {
  std::optional<double> a2_bound;
  std::optional<double> a3_bound;
  std::vector<BoundBranch> a2_branches;
  std::vector<BoundBranch> a3_branches;
  /// The sharpened |a3| branch obtained from the |p2 - v p1^2| estimate
  /// (starlike class only).
  std::optional<double> r_value;
};

/// All bound functions require b1 > 0 (ParameterError otherwise); lambda must
/// be >= 0 for bound_r_sigma.
BoundReport bound_r_sigma(double lambda, double b1, double b2);
BoundReport bound_sstar_sigma(double b1, double b2);
BoundReport bound_k_sigma(double b1, double b2);
BoundReport bound_mixed(BoundClass kind, double b1, double b2);

/// Dispatch on spec.kind.
BoundReport bounds_for(const ClassSpec& spec, double b1, double b2);

/// max(1, |2v - 1|) estimate specialized at v = 2(b1 - b2) / (3 b1), folded
/// into the starlike |a3| bound: (b1 + 3 b1 max{1, |(b1-4b2)/(3b1)|}) / 4.
double keogh_merkes_r(double b1, double b2);

/// The starlike and convex reports carry branch values whose form differs
/// from what direct term-by-term maximization of the underlying coefficient
/// relation yields. The "branch" values are what BoundReport uses; the
/// "derived" values come from the maximization route. verify emits both,
/// labeled, so the discrepancy is visible side by side.
double sstar_a2sq_third_branch(double b1, double b2);  // b1^3/(b1^2+|b1-b2|)
double sstar_a2sq_third_derived(double b1, double b2);  // b1^3/|b1^2+b1-b2|
double sstar_a3_second_branch(double b1, double b2);   // (b1^2+b1+|b2-b1|)/2
double sstar_a3_second_derived(double b1, double b2);   // (b1^2+|b2|+|b1-b2|)/2
double k_sigma_a3_first_branch(double b1, double b2);  // (b1^2+b1+|b2-b1|)/6
double k_sigma_a3_first_derived(double b1, double b2);  // (b1^2+|b2|+|b1-b2|)/6

}  // namespace bicoeff
