#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"

#include "bicoeff/caratheodory.hpp"
#include "bicoeff/class_bounds.hpp"
#include "bicoeff/coeff_system.hpp"
#include "bicoeff/errors.hpp"
#include "bicoeff/ma_minda.hpp"
#include "bicoeff/rng.hpp"

using bicoeff::BoundClass;
using bicoeff::CaratheodoryCoeffs;
using bicoeff::CoeffTuple;
using bicoeff::Complex;
using bicoeff::ExtremalResult;
using bicoeff::FeasibilityMode;
using bicoeff::Functional;
using bicoeff::FunctionalId;

namespace {

double dist(Complex a, Complex b) { return std::abs(a - b); }

// Literal closed forms the bound rows are built from, restated independently
// of triangle_bound's term table.
double closed_form_bound(Functional fn, double lambda, double b1, double b2) {
  const double t = b1 + std::abs(b2 - b1);
  const double spread = std::abs(b2 - b1);
  switch (fn) {
    case Functional::Eq17a: return t / (1.0 + 2.0 * lambda);
    case Functional::Eq19: return t;
    case Functional::Eq19_1: return 0.5 * (b1 * b1 + b1 + spread);
    case Functional::Eq19_33: return t;
    case Functional::Eq19_12: return (b1 * b1 + b1 + spread) / 6.0;
    case Functional::Eq19_42: return b1 * (3.0 * b1 + 2.0) / 12.0;
    case Functional::Eq7: return 3.0 * t / 8.0;
    case Functional::Eq8: return 5.0 * t / 12.0;
    case Functional::Teq7: return 5.0 * t / 9.0;
    case Functional::Teq8: return 7.0 * t / 9.0;
    case Functional::Te7: return 0.5 * t;
    case Functional::Te8: return 0.5 * t;
    default: REQUIRE(false);
  }
  return 0.0;
}

const Functional kBoundFunctionals[] = {
    Functional::Eq17a, Functional::Eq19,  Functional::Eq19_1,
    Functional::Eq19_33, Functional::Eq19_12, Functional::Eq19_42,
    Functional::Eq7,   Functional::Eq8,   Functional::Teq7,
    Functional::Teq8,  Functional::Te7,   Functional::Te8};

// Functionals whose term-by-term bound is attained by a phase-aligned box
// tuple (no variable shared between additive terms).
const Functional kAlignedFunctionals[] = {
    Functional::Eq17a, Functional::Eq19, Functional::Eq19_33,
    Functional::Eq19_42, Functional::Eq7, Functional::Eq8,
    Functional::Teq7, Functional::Teq8, Functional::Te7, Functional::Te8};

CaratheodoryCoeffs coeffs2(Complex c1, Complex c2) {
  return CaratheodoryCoeffs{{c1, c2}};
}

}  // namespace

TEST_CASE("functional values at hand-checked tuples") {
  const CoeffTuple twos{Complex(2.0), Complex(2.0), Complex(2.0), Complex(2.0)};
  const CoeffTuple mirror{Complex(2.0), Complex(2.0), Complex(-2.0),
                          Complex(2.0)};

  CHECK(dist(functional_value(FunctionalId::of(Functional::Eq17a), 1.0, 2.0,
                              2.0, twos),
             Complex(2.0 / 3.0)) <= 1e-14);
  CHECK(dist(functional_value(FunctionalId::of(Functional::Eq19), 0.0, 2.0,
                              2.0, twos),
             Complex(2.0)) <= 1e-14);
  CHECK(dist(functional_value(FunctionalId::of(Functional::Te7), 0.0, 2.0, 2.0,
                              twos),
             Complex(1.0)) <= 1e-14);
  CHECK(dist(functional_value(FunctionalId::of(Functional::Teq8), 0.0, 2.0,
                              2.0, twos),
             Complex(14.0 / 9.0)) <= 1e-14);

  // The difference-route functional vanishes when the sides coincide and
  // reaches its bound when the linear parts oppose.
  CHECK(dist(functional_value(FunctionalId::of(Functional::Eq19_42), 0.0, 2.0,
                              2.0, twos),
             Complex(0.0)) <= 1e-14);
  const CoeffTuple opposed{Complex(2.0), Complex(2.0), Complex(-2.0),
                           Complex(-2.0)};
  CHECK(dist(functional_value(FunctionalId::of(Functional::Eq19_42), 0.0, 2.0,
                              2.0, opposed),
             Complex(4.0 / 3.0)) <= 1e-14);

  CHECK(dist(functional_value(FunctionalId::keogh_merkes(Complex(0.0)), 0.0,
                              1.0, 1.0, twos),
             Complex(2.0)) <= 1e-14);
  CHECK(dist(functional_value(FunctionalId::keogh_merkes(Complex(1.5)), 0.0,
                              1.0, 1.0, mirror),
             Complex(-4.0)) <= 1e-14);
}

TEST_CASE("triangle bounds equal the closed forms") {
  for (int it = 0; it < 20; ++it) {
    bicoeff::Rng rng(bicoeff::derive_seed(53, static_cast<uint64_t>(it)));
    const double b1 = rng.uniform(0.05, 2.5);
    const double b2 = rng.uniform(-2.5, 2.5);
    const double lambda = rng.uniform(0.0, 3.0);
    for (const Functional fn : kBoundFunctionals) {
      const double expect = closed_form_bound(fn, lambda, b1, b2);
      const double got =
          triangle_bound(FunctionalId::of(fn), lambda, b1, b2);
      CHECK(got == doctest::Approx(expect).epsilon(1e-12));
    }
  }
}

TEST_CASE("functional tokens round trip") {
  for (const Functional fn :
       {Functional::Eq17a, Functional::Eq19, Functional::Eq19_1,
        Functional::Eq19_10, Functional::Eq19_31, Functional::Eq19_33,
        Functional::Eq19_12, Functional::Eq19_32, Functional::Eq19_42,
        Functional::Eq7, Functional::Eq8, Functional::Teq7, Functional::Teq8,
        Functional::Te7, Functional::Te8, Functional::KeoghMerkes}) {
    const auto back = bicoeff::functional_from_string(bicoeff::to_string(fn));
    REQUIRE(back.has_value());
    CHECK(*back == fn);
  }
  CHECK_FALSE(bicoeff::functional_from_string("eq0").has_value());
}

TEST_CASE("solving the linear relations") {
  // Weighted-derivative class at the half-plane target, extremal pair.
  const auto r1 = bicoeff::solve_class_coefficients(
      {BoundClass::RSigma, 1.0}, 2.0, 2.0, coeffs2(Complex(2.0), Complex(2.0)),
      coeffs2(Complex(-2.0), Complex(2.0)));
  CHECK(dist(r1.a2, Complex(1.0)) <= 1e-13);
  CHECK(r1.consistent);
  CHECK(dist(functional_value(FunctionalId::of(Functional::Eq17a), 1.0, 2.0,
                              2.0,
                              CoeffTuple{Complex(2.0), Complex(2.0),
                                         Complex(-2.0), Complex(2.0)}),
             Complex(2.0 / 3.0)) <= 1e-14);

  // Starlike: p1 = -q1 = 2t gives a2 = B1 t.
  const Complex t(0.3, 0.2);
  const auto r2 = bicoeff::solve_class_coefficients(
      {BoundClass::SstarSigma, 0.0}, 1.5, 0.7,
      coeffs2(2.0 * t, Complex(0.5)), coeffs2(-2.0 * t, Complex(-0.3)));
  CHECK(dist(r2.a2, 1.5 * t) <= 1e-13);
  CHECK(r2.consistent);

  // Convex: a2 = B1 p1 / 4.
  const Complex p1(1.0, 1.0);
  const auto r3 = bicoeff::solve_class_coefficients(
      {BoundClass::KSigma, 0.0}, 2.0, 1.0, coeffs2(p1, Complex(0.4)),
      coeffs2(-p1, Complex(0.2)));
  CHECK(dist(r3.a2, 2.0 * p1 / 4.0) <= 1e-13);
  CHECK(r3.consistent);

  // Breaking the cross-side relation clears the consistency flag.
  const auto r4 = bicoeff::solve_class_coefficients(
      {BoundClass::KSigma, 0.0}, 2.0, 1.0, coeffs2(p1, Complex(0.4)),
      coeffs2(-0.5 * p1, Complex(0.2)));
  CHECK_FALSE(r4.consistent);

  // The starlike/derivative mix doubles the inverse-side first coefficient.
  const auto r5 = bicoeff::solve_class_coefficients(
      {BoundClass::MixedSstarR, 0.0}, 1.2, 0.4,
      coeffs2(Complex(0.6, -0.2), Complex(0.3)),
      coeffs2(-2.0 * Complex(0.6, -0.2), Complex(0.1)));
  CHECK(r5.consistent);
  const auto r6 = bicoeff::solve_class_coefficients(
      {BoundClass::MixedSstarR, 0.0}, 1.2, 0.4,
      coeffs2(Complex(0.6, -0.2), Complex(0.3)),
      coeffs2(-Complex(0.6, -0.2), Complex(0.1)));
  CHECK_FALSE(r6.consistent);
}

TEST_CASE("consistency scales per class") {
  CHECK(bicoeff::consistency_scale(BoundClass::RSigma) == 1.0);
  CHECK(bicoeff::consistency_scale(BoundClass::SstarSigma) == 1.0);
  CHECK(bicoeff::consistency_scale(BoundClass::KSigma) == 1.0);
  CHECK(bicoeff::consistency_scale(BoundClass::MixedKR) == 1.0);
  CHECK(bicoeff::consistency_scale(BoundClass::MixedSstarR) == 2.0);
  CHECK(bicoeff::consistency_scale(BoundClass::MixedSstarK) == 2.0);
}

TEST_CASE("solved pairs from the joint sampler are consistent") {
  for (const BoundClass kind :
       {BoundClass::RSigma, BoundClass::SstarSigma, BoundClass::KSigma,
        BoundClass::MixedKR, BoundClass::MixedSstarR,
        BoundClass::MixedSstarK}) {
    const double scale = bicoeff::consistency_scale(kind);
    for (int it = 0; it < 100; ++it) {
      const auto [p, q] = bicoeff::sample_joint_pair(
          scale, 2, bicoeff::derive_seed(59, static_cast<uint64_t>(it)));
      const auto res =
          bicoeff::solve_class_coefficients({kind, 0.7}, 1.3, -0.4, p, q);
      CHECK(res.consistent);
    }
  }
}

TEST_CASE("aligned candidates attain the box bound") {
  for (int it = 0; it < 6; ++it) {
    bicoeff::Rng rng(bicoeff::derive_seed(61, static_cast<uint64_t>(it)));
    const double b1 = rng.uniform(0.05, 2.5);
    const double b2 = rng.uniform(-2.5, 2.5);
    const double lambda = rng.uniform(0.0, 3.0);
    for (const Functional fn : kAlignedFunctionals) {
      const ExtremalResult r =
          maximize_functional(FunctionalId::of(fn), lambda, b1, b2,
                              FeasibilityMode::Box, 200,
                              bicoeff::derive_seed(67, static_cast<uint64_t>(it)));
      CHECK(r.max_modulus ==
            doctest::Approx(closed_form_bound(fn, lambda, b1, b2))
                .epsilon(1e-9));
      CHECK(r.max_modulus == doctest::Approx(r.triangle_value).epsilon(1e-9));
    }
  }
}

TEST_CASE("shared-square functionals fall short of the termwise sum") {
  // At B2 < B1 the q1^2 monomial carries two additive terms of eq19.1 with
  // cancelling phases, so no box tuple reaches the term-by-term total.
  const ExtremalResult r =
      maximize_functional(FunctionalId::of(Functional::Eq19_1), 0.0, 1.0, -0.5,
                          FeasibilityMode::Box, 2000, 3);
  CHECK(r.triangle_value == doctest::Approx(1.75).epsilon(1e-12));
  CHECK(r.max_modulus == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("extremal results are deterministic and self-consistent") {
  const FunctionalId id = FunctionalId::of(Functional::Te7);
  const ExtremalResult a =
      maximize_functional(id, 0.0, 1.5, 0.5, FeasibilityMode::Tight, 500, 77);
  const ExtremalResult b =
      maximize_functional(id, 0.0, 1.5, 0.5, FeasibilityMode::Tight, 500, 77);
  CHECK(a.max_modulus == b.max_modulus);
  CHECK(a.argmax.p1 == b.argmax.p1);
  CHECK(a.argmax.p2 == b.argmax.p2);
  CHECK(a.argmax.q1 == b.argmax.q1);
  CHECK(a.argmax.q2 == b.argmax.q2);
  CHECK(a.budget == b.budget);
  CHECK(a.seed == 77);
  CHECK(a.budget >= 500);

  // The reported maximum re-evaluates exactly at the reported argmax.
  CHECK(std::abs(functional_value(id, 0.0, 1.5, 0.5, a.argmax)) ==
        a.max_modulus);
  CHECK(a.max_modulus >= a.alignment_value);
  CHECK(a.max_modulus >= a.stochastic_value);
  CHECK(a.triangle_value ==
        doctest::Approx(triangle_bound(id, 0.0, 1.5, 0.5)).epsilon(1e-15));

  // Tight-feasible argmax, verified through the public validator.
  CHECK(bicoeff::validate_caratheodory(coeffs2(a.argmax.p1, a.argmax.p2),
                                       FeasibilityMode::Tight));
  CHECK(bicoeff::validate_caratheodory(coeffs2(a.argmax.q1, a.argmax.q2),
                                       FeasibilityMode::Tight));

  const ExtremalResult c =
      maximize_functional(id, 0.0, 1.5, 0.5, FeasibilityMode::Box, 500, 77);
  CHECK(bicoeff::validate_caratheodory(coeffs2(c.argmax.p1, c.argmax.p2),
                                       FeasibilityMode::Box));
  CHECK(a.max_modulus <= c.max_modulus + 1e-9);
}

TEST_CASE("random refinement alone comes close to the maximum") {
  const struct {
    Functional fn;
    double b1, b2;
    FeasibilityMode mode;
  } cases[] = {
      {Functional::Eq19, 2.0, 2.0, FeasibilityMode::Box},
      {Functional::Eq17a, 1.0, -0.5, FeasibilityMode::Box},
      {Functional::Te7, 1.5, 0.5, FeasibilityMode::Tight},
      {Functional::Teq8, 1.0, 0.25, FeasibilityMode::Tight},
  };
  for (const auto& c : cases) {
    const ExtremalResult r = maximize_functional(
        FunctionalId::of(c.fn), 1.0, c.b1, c.b2, c.mode, 4000, 11);
    CHECK(r.stochastic_value >= 0.99 * r.max_modulus);
  }
}

TEST_CASE("quadratic-shift maxima over both feasibility sets") {
  const Complex vs[] = {Complex(-2.0), Complex(-1.0), Complex(0.0),
                        Complex(0.5),  Complex(1.0),  Complex(1.5),
                        Complex(2.0),  Complex(0.5, 0.5)};
  for (const Complex v : vs) {
    const FunctionalId id = FunctionalId::keogh_merkes(v);
    const ExtremalResult box = maximize_functional(
        id, 0.0, 1.0, 0.0, FeasibilityMode::Box, 400, 21);
    CHECK(box.max_modulus ==
          doctest::Approx(2.0 + 4.0 * std::abs(v)).epsilon(1e-9));
    const ExtremalResult tight = maximize_functional(
        id, 0.0, 1.0, 0.0, FeasibilityMode::Tight, 400, 22);
    const double expect = 2.0 * std::max(1.0, std::abs(2.0 * v - 1.0));
    CHECK(tight.max_modulus == doctest::Approx(expect).epsilon(1e-9));
  }
}

TEST_CASE("sharpened starlike branch equals the tight maximum") {
  bicoeff::Rng rng(71);
  for (int it = 0; it < 10; ++it) {
    const double b1 = rng.uniform(0.1, 2.5);
    const double b2 = rng.uniform(-2.5, 2.5);
    const ExtremalResult r =
        maximize_functional(FunctionalId::of(Functional::Eq19_33), 0.0, b1, b2,
                            FeasibilityMode::Tight, 400, 23);
    CHECK(r.max_modulus ==
          doctest::Approx(bicoeff::keogh_merkes_r(b1, b2)).epsilon(1e-9));
  }
}

TEST_CASE("subordination expansion matches the closed-form leading coefficients") {
  // Half-plane target driven by its own extremal sequence reproduces itself.
  const bicoeff::MaMindaPhi halfplane = bicoeff::MaMindaPhi::order_beta(0.0);
  const CaratheodoryCoeffs twos{{Complex(2.0), Complex(2.0), Complex(2.0)}};
  const bicoeff::PowerSeries s =
      subordination_expand(halfplane.coefficients(3), twos);
  CHECK(dist(s[0], Complex(1.0)) <= 1e-14);
  for (int k = 1; k <= 3; ++k) CHECK(dist(s[k], Complex(2.0)) <= 1e-12);

  for (int it = 0; it < 100; ++it) {
    bicoeff::Rng rng(bicoeff::derive_seed(73, static_cast<uint64_t>(it)));
    const double b1 = rng.uniform(0.05, 2.5);
    const double b2 = rng.uniform(-2.5, 2.5);
    const double b3 = rng.uniform(-2.5, 2.5);
    const bicoeff::MaMindaPhi phi = bicoeff::MaMindaPhi::custom({b1, b2, b3});
    const CaratheodoryCoeffs p = bicoeff::sample_caratheodory(
        2, 3, bicoeff::derive_seed(79, static_cast<uint64_t>(it)));
    const bicoeff::PowerSeries out =
        subordination_expand(phi.coefficients(3), p);
    const Complex p1 = p.coeff(1), p2 = p.coeff(2);
    CHECK(dist(out[1], 0.5 * b1 * p1) <= 1e-12);
    CHECK(dist(out[2], 0.5 * b1 * (p2 - 0.5 * p1 * p1) + 0.25 * b2 * p1 * p1) <=
          1e-12);
  }

  bicoeff::PowerSeries not_one(3);
  not_one[0] = 0.5;
  CHECK_THROWS_AS(subordination_expand(not_one, twos),
                  bicoeff::ParameterError);
}

TEST_CASE("joint sampling pins the cross-side relation exactly") {
  for (const double scale : {1.0, 2.0}) {
    for (int it = 0; it < 500; ++it) {
      const auto [p, q] = bicoeff::sample_joint_pair(
          scale, 2, bicoeff::derive_seed(83, static_cast<uint64_t>(it)));
      CHECK(q.coeff(1) == -scale * p.coeff(1));
      CHECK(bicoeff::validate_caratheodory(p, FeasibilityMode::Tight));
      CHECK(bicoeff::validate_caratheodory(q, FeasibilityMode::Tight));
    }
  }
  const auto [p1, q1] = bicoeff::sample_joint_pair(2.0, 3, 5);
  const auto [p2, q2] = bicoeff::sample_joint_pair(2.0, 3, 5);
  CHECK(p1.coeff(2) == p2.coeff(2));
  CHECK(q1.coeff(3) == q2.coeff(3));
  CHECK_THROWS_AS(bicoeff::sample_joint_pair(1.5, 2, 1),
                  bicoeff::ParameterError);
  CHECK_THROWS_AS(bicoeff::sample_joint_pair(1.0, 1, 1),
                  bicoeff::ParameterError);
}

TEST_CASE("functional values on joint samples never exceed the bounds") {
  const bicoeff::MaMindaPhi phi = bicoeff::MaMindaPhi::order_beta(0.25);
  const double b1 = phi.b1(), b2 = phi.b2();
  const struct {
    Functional fn;
    double scale;
    double lambda;
  } cases[] = {
      {Functional::Eq17a, 1.0, 0.0}, {Functional::Eq17a, 1.0, 1.0},
      {Functional::Eq19, 1.0, 0.0},  {Functional::Eq19_33, 1.0, 0.0},
      {Functional::Eq19_42, 1.0, 0.0}, {Functional::Eq7, 1.0, 0.0},
      {Functional::Eq8, 1.0, 0.0},   {Functional::Teq7, 2.0, 0.0},
      {Functional::Teq8, 2.0, 0.0},  {Functional::Te7, 2.0, 0.0},
      {Functional::Te8, 2.0, 0.0},
  };
  for (const auto& c : cases) {
    const double bound = closed_form_bound(c.fn, c.lambda, b1, b2);
    for (int it = 0; it < 3000; ++it) {
      const auto [p, q] = bicoeff::sample_joint_pair(
          c.scale, 2, bicoeff::derive_seed(89, static_cast<uint64_t>(it)));
      const CoeffTuple t{p.coeff(1), p.coeff(2), q.coeff(1), q.coeff(2)};
      const double value = std::abs(
          functional_value(FunctionalId::of(c.fn), c.lambda, b1, b2, t));
      CHECK(value <= bound + 1e-9);
    }
  }
}

TEST_CASE("maximize validates its inputs") {
  CHECK_THROWS_AS(maximize_functional(FunctionalId::of(Functional::Eq19), 0.0,
                                      1.0, 0.0, FeasibilityMode::Box, 0, 1),
                  bicoeff::ParameterError);
  CHECK_THROWS_AS(maximize_functional(FunctionalId::of(Functional::Eq19), 0.0,
                                      0.0, 0.0, FeasibilityMode::Box, 10, 1),
                  bicoeff::ParameterError);
  // The resolved starlike route has a pole at B2 = B1^2 + B1.
  CHECK_THROWS_AS(maximize_functional(FunctionalId::of(Functional::Eq19_10),
                                      0.0, 1.0, 2.0, FeasibilityMode::Box, 10,
                                      1),
                  bicoeff::ParameterError);
}

TEST_CASE("functional targets") {
  CHECK(bicoeff::functional_target(Functional::Eq17a) ==
        bicoeff::FunctionalTarget::A2Sq);
  CHECK(bicoeff::functional_target(Functional::Eq19_33) ==
        bicoeff::FunctionalTarget::A3);
  CHECK(bicoeff::functional_target(Functional::Te8) ==
        bicoeff::FunctionalTarget::A3);
  CHECK(bicoeff::functional_target(Functional::KeoghMerkes) ==
        bicoeff::FunctionalTarget::KeoghMerkes);
}
