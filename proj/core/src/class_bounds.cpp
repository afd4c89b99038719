#include "bicoeff/class_bounds.hpp"

#include <algorithm>
#include <cmath>

#include "bicoeff/errors.hpp"

namespace bicoeff {

namespace {

void check_b1(double b1) {
  if (!(b1 > 0.0)) throw ParameterError("bounds need B1 > 0");
}

double min_branch(const std::vector<BoundBranch>& branches) {
  double best = branches.front().value;
  for (const auto& b : branches) best = std::min(best, b.value);
  return best;
}

}  // namespace

const char* to_string(BoundClass kind) {
  switch (kind) {
    case BoundClass::RSigma: return "r-sigma";
    case BoundClass::SstarSigma: return "sstar-sigma";
    case BoundClass::KSigma: return "k-sigma";
    case BoundClass::MixedKR: return "mixed-k-r";
    case BoundClass::MixedSstarR: return "mixed-sstar-r";
    case BoundClass::MixedSstarK: return "mixed-sstar-k";
  }
  return "?";
}

std::optional<BoundClass> bound_class_from_string(std::string_view token) {
  if (token == "r-sigma") return BoundClass::RSigma;
  if (token == "sstar-sigma") return BoundClass::SstarSigma;
  if (token == "k-sigma") return BoundClass::KSigma;
  if (token == "mixed-k-r") return BoundClass::MixedKR;
  if (token == "mixed-sstar-r") return BoundClass::MixedSstarR;
  if (token == "mixed-sstar-k") return BoundClass::MixedSstarK;
  return std::nullopt;
}

BoundReport bound_r_sigma(double lambda, double b1, double b2) {
  check_b1(b1);
  if (!(lambda >= 0.0)) throw ParameterError("bounds need lambda >= 0");
  BoundReport out;
  out.a2_branches.push_back(
      {"eq17a", std::sqrt((b1 + std::abs(b1 - b2)) / (1.0 + 2.0 * lambda))});
  out.a2_bound = min_branch(out.a2_branches);
  // No |a3| estimate is claimed for this class.
  return out;
}

double keogh_merkes_r(double b1, double b2) {
  check_b1(b1);
  const double inner = std::abs((b1 - 4.0 * b2) / (3.0 * b1));
  return 0.25 * (b1 + 3.0 * b1 * std::max(1.0, inner));
}

double sstar_a2sq_third_branch(double b1, double b2) {
  check_b1(b1);
  return b1 * b1 * b1 / (b1 * b1 + std::abs(b1 - b2));
}

double sstar_a2sq_third_derived(double b1, double b2) {
  check_b1(b1);
  return b1 * b1 * b1 / std::abs(b1 * b1 + b1 - b2);
}

double sstar_a3_second_branch(double b1, double b2) {
  check_b1(b1);
  return 0.5 * (b1 * b1 + b1 + std::abs(b2 - b1));
}

double sstar_a3_second_derived(double b1, double b2) {
  check_b1(b1);
  return 0.5 * (b1 * b1 + std::abs(b2) + std::abs(b1 - b2));
}

double k_sigma_a3_first_branch(double b1, double b2) {
  check_b1(b1);
  return (b1 * b1 + b1 + std::abs(b2 - b1)) / 6.0;
}

double k_sigma_a3_first_derived(double b1, double b2) {
  check_b1(b1);
  return (b1 * b1 + std::abs(b2) + std::abs(b1 - b2)) / 6.0;
}

BoundReport bound_sstar_sigma(double b1, double b2) {
  check_b1(b1);
  const double spread = std::abs(b2 - b1);
  BoundReport out;
  out.a2_branches.push_back({"eq19", std::sqrt(b1 + spread)});
  out.a2_branches.push_back(
      {"eq19.1", std::sqrt(0.5 * (b1 * b1 + b1 + spread))});
  out.a2_branches.push_back(
      {"eq19.10", std::sqrt(sstar_a2sq_third_branch(b1, b2))});
  out.a2_bound = min_branch(out.a2_branches);

  out.a3_branches.push_back({"eq19.33", b1 + spread});
  out.a3_branches.push_back({"eq19.31", sstar_a3_second_branch(b1, b2)});
  out.r_value = keogh_merkes_r(b1, b2);
  out.a3_branches.push_back({"keogh-merkes", *out.r_value});
  out.a3_bound = min_branch(out.a3_branches);
  return out;
}

BoundReport bound_k_sigma(double b1, double b2) {
  check_b1(b1);
  const double spread = std::abs(b2 - b1);
  BoundReport out;
  out.a2_branches.push_back(
      {"eq19.12", std::sqrt((b1 * b1 + b1 + spread) / 6.0)});
  out.a2_branches.push_back({"eq18.12", 0.5 * b1});
  out.a2_bound = min_branch(out.a2_branches);

  out.a3_branches.push_back({"eq19.32", k_sigma_a3_first_branch(b1, b2)});
  out.a3_branches.push_back({"eq19.42", b1 * (3.0 * b1 + 2.0) / 12.0});
  out.a3_bound = min_branch(out.a3_branches);
  return out;
}

BoundReport bound_mixed(BoundClass kind, double b1, double b2) {
  check_b1(b1);
  const double t = b1 + std::abs(b2 - b1);
  BoundReport out;
  switch (kind) {
    case BoundClass::MixedKR:
      out.a2_branches.push_back({"eq7", std::sqrt(3.0 * t / 8.0)});
      out.a3_branches.push_back({"eq8", 5.0 * t / 12.0});
      break;
    case BoundClass::MixedSstarR:
      out.a2_branches.push_back({"teq7", std::sqrt(5.0 * t) / 3.0});
      out.a3_branches.push_back({"teq8", 7.0 * t / 9.0});
      break;
    case BoundClass::MixedSstarK:
      out.a2_branches.push_back({"te7", std::sqrt(0.5 * t)});
      out.a3_branches.push_back({"te8", 0.5 * t});
      break;
    default:
      throw ParameterError("bound_mixed expects a mixed class");
  }
  out.a2_bound = min_branch(out.a2_branches);
  out.a3_bound = min_branch(out.a3_branches);
  return out;
}

BoundReport bounds_for(const ClassSpec& spec, double b1, double b2) {
  switch (spec.kind) {
    case BoundClass::RSigma: return bound_r_sigma(spec.lambda, b1, b2);
    case BoundClass::SstarSigma: return bound_sstar_sigma(b1, b2);
    case BoundClass::KSigma: return bound_k_sigma(b1, b2);
    default: return bound_mixed(spec.kind, b1, b2);
  }
}

}  // namespace bicoeff
