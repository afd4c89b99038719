#include "bicoeff/ma_minda.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "bicoeff/errors.hpp"

namespace bicoeff {

namespace {

std::string format_param(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

// (1 + z)^a * (1 - z)^(-a) expanded by multiplying the two binomial series.
std::vector<double> strongly_starlike_coeffs(double alpha, int order) {
  std::vector<double> plus(static_cast<size_t>(order) + 1, 0.0);
  std::vector<double> minus(static_cast<size_t>(order) + 1, 0.0);
  plus[0] = minus[0] = 1.0;
  for (int k = 1; k <= order; ++k) {
    // binomial(alpha, k) and binomial(alpha + k - 1, k) by running products
    plus[static_cast<size_t>(k)] =
        plus[static_cast<size_t>(k - 1)] * (alpha - (k - 1)) / k;
    minus[static_cast<size_t>(k)] =
        minus[static_cast<size_t>(k - 1)] * (alpha + (k - 1)) / k;
  }
  std::vector<double> out(static_cast<size_t>(order), 0.0);
  for (int k = 1; k <= order; ++k) {
    double acc = 0.0;
    for (int j = 0; j <= k; ++j) {
      acc += plus[static_cast<size_t>(j)] * minus[static_cast<size_t>(k - j)];
    }
    out[static_cast<size_t>(k - 1)] = acc;
  }
  return out;
}

std::vector<double> janowski_coeffs(double a, double b, int order) {
  // (1 + Az)/(1 + Bz) = 1 + (A - B) z - B (A - B) z^2 + B^2 (A - B) z^3 - ...
  std::vector<double> out(static_cast<size_t>(order), 0.0);
  double factor = a - b;
  for (int k = 0; k < order; ++k) {
    out[static_cast<size_t>(k)] = factor;
    factor *= -b;
  }
  return out;
}

}  // namespace

MaMindaPhi MaMindaPhi::janowski(double a, double b) {
  if (!(b >= -1.0 && b < a && a <= 1.0)) {
    throw ParameterError("janowski family needs -1 <= B < A <= 1");
  }
  MaMindaPhi phi;
  phi.family_ = Family::Janowski;
  phi.describe_ = "janowski:" + format_param(a) + "," + format_param(b);
  phi.param_a_ = a;
  phi.param_b_ = b;
  phi.b_ = janowski_coeffs(a, b, 3);
  return phi;
}

MaMindaPhi MaMindaPhi::order_beta(double beta) {
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw ParameterError("order parameter needs 0 <= beta < 1");
  }
  MaMindaPhi phi;
  phi.family_ = Family::OrderBeta;
  phi.describe_ = "beta:" + format_param(beta);
  phi.param_a_ = beta;
  phi.b_.assign(3, 2.0 * (1.0 - beta));
  return phi;
}

MaMindaPhi MaMindaPhi::strongly_starlike(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw ParameterError("strongly starlike parameter needs 0 < alpha <= 1");
  }
  MaMindaPhi phi;
  phi.family_ = Family::StronglyStarlike;
  phi.param_a_ = alpha;
  phi.describe_ = "alpha:" + format_param(alpha);
  phi.b_ = strongly_starlike_coeffs(alpha, 3);
  return phi;
}

MaMindaPhi MaMindaPhi::custom(std::vector<double> b) {
  if (b.empty() || !(b[0] > 0.0)) {
    throw ParameterError("custom coefficient list needs B1 > 0");
  }
  MaMindaPhi phi;
  phi.family_ = Family::Custom;
  phi.describe_ = "custom:";
  for (size_t i = 0; i < b.size(); ++i) {
    if (i) phi.describe_ += ",";
    phi.describe_ += format_param(b[i]);
  }
  phi.b_ = std::move(b);
  return phi;
}

PowerSeries MaMindaPhi::coefficients(int order) const {
  PowerSeries s(order);
  s[0] = 1.0;
  std::vector<double> tail;
  switch (family_) {
    case Family::Janowski:
      tail = janowski_coeffs(param_a_, param_b_, order);
      break;
    case Family::OrderBeta:
      tail.assign(static_cast<size_t>(order), 2.0 * (1.0 - param_a_));
      break;
    case Family::StronglyStarlike:
      tail = strongly_starlike_coeffs(param_a_, order);
      break;
    case Family::Custom:
      tail = b_;
      break;
  }
  for (int k = 1; k <= order; ++k) {
    const size_t i = static_cast<size_t>(k - 1);
    s[k] = i < tail.size() ? tail[i] : 0.0;
  }
  return s;
}

std::string MaMindaPhi::describe() const { return describe_; }

namespace {

double parse_number(std::string_view token) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw UsageError("bad numeric value '" + std::string(token) +
                     "' in --phi argument");
  }
  return value;
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  size_t start = 0;
  while (true) {
    const size_t comma = text.find(',', start);
    const std::string_view token = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    if (token.empty()) throw UsageError("empty value in --phi argument");
    out.push_back(parse_number(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

MaMindaPhi parse_phi(std::string_view text) {
  const size_t colon = text.find(':');
  if (colon == std::string_view::npos || colon + 1 >= text.size()) {
    throw UsageError("--phi expects FAMILY:ARGS, got '" + std::string(text) +
                     "'");
  }
  const std::string_view family = text.substr(0, colon);
  const std::vector<double> args = parse_number_list(text.substr(colon + 1));
  if (family == "janowski") {
    if (args.size() != 2) throw UsageError("janowski needs exactly A,B");
    return MaMindaPhi::janowski(args[0], args[1]);
  }
  if (family == "beta") {
    if (args.size() != 1) throw UsageError("beta needs exactly one value");
    return MaMindaPhi::order_beta(args[0]);
  }
  if (family == "alpha") {
    if (args.size() != 1) throw UsageError("alpha needs exactly one value");
    return MaMindaPhi::strongly_starlike(args[0]);
  }
  if (family == "custom") {
    return MaMindaPhi::custom(args);
  }
  throw UsageError("unknown --phi family '" + std::string(family) + "'");
}

}  // namespace bicoeff
