#include "bicoeff/caratheodory.hpp"

#include <cmath>
#include <string>

#include "bicoeff/errors.hpp"
#include "bicoeff/rng.hpp"

namespace bicoeff {

namespace {

constexpr double kBoxRadius = 2.0;

// Shared by both transforms: run the Moebius map through the series algebra
// instead of hand-expanded formulas, so all orders come from one code path.
PowerSeries series_from_tail(std::span<const Complex> tail, Complex c0) {
  const int order = static_cast<int>(tail.size());
  PowerSeries s(order);
  s[0] = c0;
  for (int k = 1; k <= order; ++k) s[k] = tail[static_cast<size_t>(k - 1)];
  return s;
}

std::vector<Complex> tail_of(const PowerSeries& s) {
  std::vector<Complex> tail(static_cast<size_t>(s.order()));
  for (int k = 1; k <= s.order(); ++k) tail[static_cast<size_t>(k - 1)] = s[k];
  return tail;
}

struct Measure {
  std::vector<double> weights;
  std::vector<Complex> points;

  Complex moment(int i) const {
    Complex acc{};
    for (size_t j = 0; j < weights.size(); ++j) {
      acc += weights[j] * std::pow(points[j], i);
    }
    return acc;
  }
};

Measure random_measure(int atoms, Rng& rng) {
  Measure m;
  m.weights.resize(static_cast<size_t>(atoms));
  m.points.resize(static_cast<size_t>(atoms));
  double total = 0.0;
  for (auto& w : m.weights) {
    w = rng.uniform() + 1e-12;
    total += w;
  }
  for (auto& w : m.weights) w /= total;
  for (auto& x : m.points) x = rng.unit_circle();
  return m;
}

CaratheodoryCoeffs moments_of(const Measure& m, int count) {
  CaratheodoryCoeffs out;
  out.p.resize(static_cast<size_t>(count));
  // Horner-style accumulation: carry x^i along instead of calling pow.
  std::vector<Complex> power(m.points.begin(), m.points.end());
  for (int i = 1; i <= count; ++i) {
    Complex acc{};
    for (size_t j = 0; j < m.points.size(); ++j) {
      acc += m.weights[j] * power[j];
      power[j] *= m.points[j];
    }
    out.p[static_cast<size_t>(i - 1)] = 2.0 * acc;
  }
  return out;
}

}  // namespace

bool validate_caratheodory(const CaratheodoryCoeffs& c, FeasibilityMode mode,
                           double tol) {
  for (const Complex& pi : c.p) {
    if (std::abs(pi) > kBoxRadius + tol) return false;
  }
  if (mode == FeasibilityMode::Tight && c.count() >= 2) {
    const Complex p1 = c.coeff(1);
    const Complex p2 = c.coeff(2);
    const double lhs = std::abs(p2 - 0.5 * p1 * p1);
    const double rhs = 2.0 - 0.5 * std::norm(p1);
    if (lhs > rhs + tol) return false;
  }
  return true;
}

SchwarzCoeffs schwarz_from_caratheodory(const CaratheodoryCoeffs& c) {
  if (!validate_caratheodory(c, FeasibilityMode::Box)) {
    throw FeasibilityError(
        "schwarz_from_caratheodory: coefficient outside |p_i| <= 2");
  }
  if (c.count() < 1) {
    throw ParameterError("schwarz_from_caratheodory: empty coefficient list");
  }
  PowerSeries p = series_from_tail(c.p, Complex{1.0});
  PowerSeries numer = p;
  numer[0] -= 1.0;
  PowerSeries denom = p;
  denom[0] += 1.0;
  return SchwarzCoeffs{tail_of(mul(numer, reciprocal(denom)))};
}

CaratheodoryCoeffs caratheodory_from_schwarz(const SchwarzCoeffs& s) {
  if (s.count() < 1) {
    throw ParameterError("caratheodory_from_schwarz: empty coefficient list");
  }
  if (std::abs(s.coeff(1)) > 1.0 + 1e-9) {
    throw FeasibilityError("caratheodory_from_schwarz: |r1| must be <= 1");
  }
  PowerSeries r = series_from_tail(s.r, Complex{});
  PowerSeries numer = r;
  numer[0] += 1.0;
  PowerSeries denom(r.order());
  denom[0] = 1.0;
  for (int k = 1; k <= r.order(); ++k) denom[k] = -r[k];
  return CaratheodoryCoeffs{tail_of(mul(numer, reciprocal(denom)))};
}

CaratheodoryCoeffs herglotz_coeffs(std::span<const double> weights,
                                   std::span<const Complex> points, int count) {
  if (weights.size() != points.size() || weights.empty()) {
    throw ParameterError("herglotz_coeffs: weights/points size mismatch");
  }
  if (count < 1) throw ParameterError("herglotz_coeffs: count must be >= 1");
  Measure m;
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw ParameterError("herglotz_coeffs: negative weight");
    total += w;
  }
  if (total <= 0.0) throw ParameterError("herglotz_coeffs: zero total weight");
  for (double w : weights) m.weights.push_back(w / total);
  for (const Complex& x : points) {
    if (std::abs(std::abs(x) - 1.0) > 1e-12) {
      throw ParameterError("herglotz_coeffs: points must lie on |x| = 1");
    }
    m.points.push_back(x);
  }
  return moments_of(m, count);
}

CaratheodoryCoeffs sample_caratheodory(int atoms, int count, std::uint64_t seed) {
  if (atoms < 1) throw ParameterError("sample_caratheodory: atoms must be >= 1");
  if (count < 1) throw ParameterError("sample_caratheodory: count must be >= 1");
  Rng rng(seed);
  return moments_of(random_measure(atoms, rng), count);
}

CaratheodoryCoeffs sample_caratheodory_with_p1(Complex target, int count,
                                               std::uint64_t seed) {
  if (count < 1) {
    throw ParameterError("sample_caratheodory_with_p1: count must be >= 1");
  }
  const Complex t0 = 0.5 * target;
  if (std::abs(t0) > 1.0 + 1e-12) {
    throw ParameterError("sample_caratheodory_with_p1: |target| must be <= 2");
  }
  Rng rng(seed);
  const int atoms = 1 + static_cast<int>(rng.next() % 3);
  Measure base = random_measure(atoms, rng);
  const Complex m1 = base.moment(1);

  // Mix base with a two-point correction: alpha small enough keeps the
  // correction's required first moment inside the disk, and the correction
  // measure (weights (1 +- |c|)/2 at +-c/|c|) realizes any such moment.
  const double t0_abs = std::min(std::abs(t0), 1.0);
  const double alpha = rng.uniform() * (1.0 - t0_abs) / (1.0 + std::abs(m1));
  const Complex c = (t0 - alpha * m1) / (1.0 - alpha);
  double c_abs = std::abs(c);
  Complex dir = c_abs > 0.0 ? c / c_abs : Complex{1.0};
  if (c_abs > 1.0) c_abs = 1.0;

  Measure mixed;
  for (size_t j = 0; j < base.weights.size(); ++j) {
    mixed.weights.push_back(alpha * base.weights[j]);
    mixed.points.push_back(base.points[j]);
  }
  mixed.weights.push_back((1.0 - alpha) * 0.5 * (1.0 + c_abs));
  mixed.points.push_back(dir);
  mixed.weights.push_back((1.0 - alpha) * 0.5 * (1.0 - c_abs));
  mixed.points.push_back(-dir);

  CaratheodoryCoeffs out = moments_of(mixed, count);
  // The construction hits the target up to rounding; pin it bit-exactly so
  // callers can build pairs with an exact linear relation between p1 and q1.
  out.p[0] = target;
  return out;
}

}  // namespace bicoeff
