#include "bicoeff/coeff_system.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "bicoeff/errors.hpp"
#include "bicoeff/rng.hpp"

namespace bicoeff {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

// ---------------------------------------------------------------------------
// Functional term tables
// ---------------------------------------------------------------------------

// Monomials the functionals are built from. DiffSq is (p1 - q1)^2, kept as a
// single additive term because that is how the difference-route relation is
// stated and bounded.
enum class Monomial { P2, Q2, P1Sq, Q1Sq, DiffSq };

struct Term {
  Monomial m;
  Complex c;
};

double monomial_radius(Monomial m) {
  switch (m) {
    case Monomial::P2:
    case Monomial::Q2:
      return 2.0;
    case Monomial::P1Sq:
    case Monomial::Q1Sq:
      return 4.0;
    case Monomial::DiffSq:
      return 16.0;
  }
  return 0.0;
}

Complex monomial_eval(Monomial m, const CoeffTuple& t) {
  switch (m) {
    case Monomial::P2: return t.p2;
    case Monomial::Q2: return t.q2;
    case Monomial::P1Sq: return t.p1 * t.p1;
    case Monomial::Q1Sq: return t.q1 * t.q1;
    case Monomial::DiffSq: {
      const Complex d = t.p1 - t.q1;
      return d * d;
    }
  }
  return {};
}

// Additive-term decomposition of each functional. Duplicated monomials are
// intentional: the analytic triangle bound treats every additive term on its
// own, which is exactly how the closed forms arise.
std::vector<Term> functional_terms(const FunctionalId& id, double lambda,
                                   double b1, double b2) {
  const double d = b2 - b1;
  switch (id.fn) {
    case Functional::Eq17a: {
      if (!(lambda >= 0.0)) throw ParameterError("lambda must be >= 0");
      const double den = 8.0 * (1.0 + 2.0 * lambda);
      return {{Monomial::P2, 2.0 * b1 / den},
              {Monomial::Q2, 2.0 * b1 / den},
              {Monomial::P1Sq, d / den},
              {Monomial::Q1Sq, d / den}};
    }
    case Functional::Eq19:
      return {{Monomial::P2, b1 / 4.0},
              {Monomial::Q2, b1 / 4.0},
              {Monomial::P1Sq, d / 8.0},
              {Monomial::Q1Sq, d / 8.0}};
    case Functional::Eq19_1:
      return {{Monomial::Q1Sq, b1 * b1 / 8.0},
              {Monomial::P2, b1 / 8.0},
              {Monomial::Q2, b1 / 8.0},
              {Monomial::P1Sq, d / 16.0},
              {Monomial::Q1Sq, d / 16.0}};
    case Functional::Eq19_10: {
      const double den = 4.0 * (b1 * b1 + b1 - b2);
      const double c = b1 * b1 * b1 / den;  // may be infinite at the pole
      return {{Monomial::P2, c}, {Monomial::Q2, c}};
    }
    case Functional::Eq19_31:
      return {{Monomial::Q1Sq, b1 * b1 / 8.0},
              {Monomial::P2, b2 / 4.0},
              {Monomial::P1Sq, -d / 16.0},
              {Monomial::Q1Sq, -d / 16.0}};
    case Functional::Eq19_33:
      return {{Monomial::P2, 3.0 * b1 / 8.0},
              {Monomial::Q2, b1 / 8.0},
              {Monomial::P1Sq, d / 4.0}};
    case Functional::Eq19_12:
      return {{Monomial::P1Sq, b1 * b1 / 24.0},
              {Monomial::P2, b1 / 24.0},
              {Monomial::Q2, b1 / 24.0},
              {Monomial::P1Sq, d / 48.0},
              {Monomial::Q1Sq, d / 48.0}};
    case Functional::Eq19_32:
      return {{Monomial::P1Sq, -b1 * b1 / 24.0},
              {Monomial::P2, b2 / 12.0},
              {Monomial::P1Sq, d / 48.0},
              {Monomial::Q1Sq, d / 48.0}};
    case Functional::Eq19_42:
      return {{Monomial::P2, b1 / 24.0},
              {Monomial::Q2, -b1 / 24.0},
              {Monomial::DiffSq, b1 * b1 / 64.0}};
    case Functional::Eq7:
      return {{Monomial::P2, b1 / 16.0},
              {Monomial::Q2, b1 / 8.0},
              {Monomial::P1Sq, d / 32.0},
              {Monomial::Q1Sq, d / 16.0}};
    case Functional::Eq8:
      return {{Monomial::P2, b1 / 8.0},
              {Monomial::Q2, b1 / 12.0},
              {Monomial::P1Sq, d / 16.0},
              {Monomial::Q1Sq, d / 24.0}};
    case Functional::Teq7:
      return {{Monomial::P2, b1 / 6.0},
              {Monomial::Q2, b1 / 9.0},
              {Monomial::P1Sq, d / 12.0},
              {Monomial::Q1Sq, d / 18.0}};
    case Functional::Teq8:
      return {{Monomial::P2, b1 / 3.0},
              {Monomial::Q2, b1 / 18.0},
              {Monomial::P1Sq, d / 6.0},
              {Monomial::Q1Sq, d / 36.0}};
    case Functional::Te7:
      return {{Monomial::P2, b1 / 6.0},
              {Monomial::Q2, b1 / 12.0},
              {Monomial::P1Sq, d / 12.0},
              {Monomial::Q1Sq, d / 24.0}};
    case Functional::Te8:
      return {{Monomial::P2, 2.0 * b1 / 9.0},
              {Monomial::Q2, b1 / 36.0},
              {Monomial::P1Sq, d / 9.0},
              {Monomial::Q1Sq, d / 72.0}};
    case Functional::KeoghMerkes:
      return {{Monomial::P2, 1.0}, {Monomial::P1Sq, -id.v}};
  }
  throw ParameterError("unknown functional");
}

// Per-monomial combined coefficients; this is what a point evaluation sees.
struct MonomialForm {
  Complex p2{}, q2{}, p1sq{}, q1sq{}, diffsq{};
  bool uses_q = false;
};

MonomialForm combine(const std::vector<Term>& terms, Functional fn) {
  MonomialForm f;
  for (const Term& t : terms) {
    switch (t.m) {
      case Monomial::P2: f.p2 += t.c; break;
      case Monomial::Q2: f.q2 += t.c; break;
      case Monomial::P1Sq: f.p1sq += t.c; break;
      case Monomial::Q1Sq: f.q1sq += t.c; break;
      case Monomial::DiffSq: f.diffsq += t.c; break;
    }
  }
  f.uses_q = fn != Functional::KeoghMerkes;
  return f;
}

Complex eval_form(const MonomialForm& f, const CoeffTuple& t) {
  Complex acc = f.p2 * t.p2 + f.q2 * t.q2;
  if (f.p1sq != Complex{}) acc += f.p1sq * t.p1 * t.p1;
  if (f.q1sq != Complex{}) acc += f.q1sq * t.q1 * t.q1;
  if (f.diffsq != Complex{}) {
    const Complex d = t.p1 - t.q1;
    acc += f.diffsq * d * d;
  }
  return acc;
}

Complex unit_or_one(Complex c) {
  const double a = std::abs(c);
  return a > 0.0 ? c / a : Complex{1.0};
}

// ---------------------------------------------------------------------------
// Deterministic best-candidate bookkeeping
// ---------------------------------------------------------------------------

int tuple_cmp(const CoeffTuple& a, const CoeffTuple& b) {
  const std::array<double, 8> x{a.p1.real(), a.p1.imag(), a.p2.real(),
                                a.p2.imag(), a.q1.real(), a.q1.imag(),
                                a.q2.real(), a.q2.imag()};
  const std::array<double, 8> y{b.p1.real(), b.p1.imag(), b.p2.real(),
                                b.p2.imag(), b.q1.real(), b.q1.imag(),
                                b.q2.real(), b.q2.imag()};
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] < y[i]) return -1;
    if (x[i] > y[i]) return 1;
  }
  return 0;
}

struct Best {
  double value = -1.0;
  CoeffTuple tuple{};

  // Strictly-better wins; exact ties resolve to the lexicographically smaller
  // tuple, so reductions are order independent.
  void offer(double v, const CoeffTuple& t) {
    if (!std::isfinite(v)) return;
    if (v > value || (v == value && tuple_cmp(t, tuple) < 0)) {
      value = v;
      tuple = t;
    }
  }

  void merge(const Best& other) {
    if (other.value >= 0.0) offer(other.value, other.tuple);
  }
};

struct Evaluator {
  const MonomialForm& form;
  long long count = 0;

  double operator()(const CoeffTuple& t) {
    ++count;
    return std::abs(eval_form(form, t));
  }
};

// ---------------------------------------------------------------------------
// Box-mode search
// ---------------------------------------------------------------------------

// Candidates with every monomial's contribution phase-aligned. Attains
// sum(|combined coefficient| * radius), the best any single tuple can do.
void box_alignment_candidates(const MonomialForm& f, Evaluator& eval,
                              Best& best) {
  CoeffTuple t;
  t.p2 = f.p2 == Complex{} ? Complex{} : 2.0 * conj(unit_or_one(f.p2));
  t.q2 = f.q2 == Complex{} ? Complex{} : 2.0 * conj(unit_or_one(f.q2));
  if (f.diffsq != Complex{}) {
    const Complex root = std::sqrt(conj(unit_or_one(f.diffsq)));
    t.p1 = 2.0 * root;
    t.q1 = -t.p1;
  } else {
    t.p1 = f.p1sq == Complex{}
               ? Complex{}
               : 2.0 * std::sqrt(conj(unit_or_one(f.p1sq)));
    t.q1 = f.q1sq == Complex{}
               ? Complex{}
               : 2.0 * std::sqrt(conj(unit_or_one(f.q1sq)));
  }
  best.offer(eval(t), t);

  // The all-real corner, useful when every coefficient is already positive.
  CoeffTuple corner{2.0, 2.0, 2.0, 2.0};
  if (f.diffsq != Complex{}) corner.q1 = -2.0;
  best.offer(eval(corner), corner);
}

// One coordinate-ascent pass: linear coordinates get their closed-form
// optimum; squared coordinates get the phase that aligns their term.
void box_refine(const MonomialForm& f, Evaluator& eval, Best& start) {
  if (start.value < 0.0) return;
  CoeffTuple t = start.tuple;
  double value = start.value;
  for (int sweep = 0; sweep < 8; ++sweep) {
    const double before = value;

    auto rest_dir = [&](Complex coeff_times_coord) {
      const Complex rest = eval_form(f, t) - coeff_times_coord;
      return unit_or_one(rest);
    };

    if (f.p2 != Complex{}) {
      t.p2 = 2.0 * rest_dir(f.p2 * t.p2) * conj(unit_or_one(f.p2));
    }
    if (f.q2 != Complex{}) {
      t.q2 = 2.0 * rest_dir(f.q2 * t.q2) * conj(unit_or_one(f.q2));
    }
    if (f.p1sq != Complex{}) {
      const Complex target = rest_dir(f.p1sq * t.p1 * t.p1) *
                             conj(unit_or_one(f.p1sq));
      t.p1 = 2.0 * std::sqrt(target);
    }
    if (f.q1sq != Complex{}) {
      const Complex target = rest_dir(f.q1sq * t.q1 * t.q1) *
                             conj(unit_or_one(f.q1sq));
      t.q1 = 2.0 * std::sqrt(target);
    }
    if (f.diffsq != Complex{}) {
      // The difference term couples p1 and q1: scan boundary phases.
      for (Complex* coord : {&t.p1, &t.q1}) {
        Complex best_c = *coord;
        double best_v = eval(t);
        for (int k = 0; k < 64; ++k) {
          *coord = 2.0 * std::polar(1.0, 2.0 * kPi * k / 64.0);
          const double v = eval(t);
          if (v > best_v) {
            best_v = v;
            best_c = *coord;
          }
        }
        *coord = best_c;
        double step = 2.0 * kPi / 64.0;
        for (int it = 0; it < 12; ++it) {
          step *= 0.5;
          const Complex cur = *coord;
          for (double sgn : {-1.0, 1.0}) {
            *coord = cur * std::polar(1.0, sgn * step);
            const double v = eval(t);
            if (v > best_v) {
              best_v = v;
              best_c = *coord;
            }
          }
          *coord = best_c;
        }
      }
    }
    value = eval(t);
    if (value <= before * (1.0 + 1e-14)) break;
  }
  start.offer(value, t);
}

void search_box(const MonomialForm& f, long long budget, std::uint64_t seed,
                Evaluator& eval, Best& alignment, Best& stochastic) {
  box_alignment_candidates(f, eval, alignment);

  constexpr int kStarts = 4;
  std::array<Best, kStarts> top;
  for (long long i = 0; i < budget; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    CoeffTuple t;
    t.p1 = std::polar(2.0 * rng.uniform(), 2.0 * kPi * rng.uniform());
    t.p2 = std::polar(2.0 * rng.uniform(), 2.0 * kPi * rng.uniform());
    t.q1 = std::polar(2.0 * rng.uniform(), 2.0 * kPi * rng.uniform());
    t.q2 = std::polar(2.0 * rng.uniform(), 2.0 * kPi * rng.uniform());
    const double v = eval(t);
    // Insert into the running top-k (k is tiny; linear shift is fine).
    for (int s = 0; s < kStarts; ++s) {
      if (v > top[s].value ||
          (v == top[s].value && tuple_cmp(t, top[s].tuple) < 0)) {
        for (int r = kStarts - 1; r > s; --r) top[r] = top[r - 1];
        top[s].value = v;
        top[s].tuple = t;
        break;
      }
    }
  }
  for (Best& b : top) {
    if (b.value < 0.0) continue;
    box_refine(f, eval, b);
    stochastic.merge(b);
  }
}

// ---------------------------------------------------------------------------
// Tight-mode search
// ---------------------------------------------------------------------------

// One side of a tuple as an explicit boundary measure with cached moments.
struct SideCand {
  std::vector<double> w;
  std::vector<Complex> x;
  Complex c1{}, c2{};  // coefficient pair (2 * first and second moments)

  void refresh() {
    Complex m1{}, m2{};
    for (size_t j = 0; j < w.size(); ++j) {
      m1 += w[j] * x[j];
      m2 += w[j] * x[j] * x[j];
    }
    c1 = 2.0 * m1;
    c2 = 2.0 * m2;
  }

  // Rotating every atom by u maps (c1, c2) to (u c1, u^2 c2) and stays a
  // genuine measure, which is what lets the two sides be phase-matched.
  SideCand rotated(Complex u) const {
    SideCand out = *this;
    for (Complex& xi : out.x) xi *= u;
    out.refresh();
    return out;
  }
};

SideCand one_atom(Complex x) {
  SideCand s;
  s.w = {1.0};
  s.x = {x};
  s.refresh();
  return s;
}

SideCand two_atom(double lam, Complex x, Complex y) {
  SideCand s;
  s.w = {lam, 1.0 - lam};
  s.x = {x, y};
  s.refresh();
  return s;
}

SideCand random_side(Rng& rng) {
  const int atoms = 1 + static_cast<int>(rng.next() % 3);
  SideCand s;
  double total = 0.0;
  for (int j = 0; j < atoms; ++j) {
    const double w = rng.uniform() + 1e-12;
    s.w.push_back(w);
    total += w;
    s.x.push_back(rng.unit_circle());
  }
  for (double& w : s.w) w /= total;
  s.refresh();
  return s;
}

std::vector<SideCand> structured_sides() {
  std::vector<SideCand> out;
  for (int k = 0; k < 64; ++k) {
    out.push_back(one_atom(std::polar(1.0, 2.0 * kPi * k / 64.0)));
  }
  for (int k = 0; k < 32; ++k) {
    const Complex x = std::polar(1.0, 2.0 * kPi * k / 32.0);
    out.push_back(two_atom(0.5, x, -x));
  }
  for (double lam : {0.25, 0.5, 0.75}) {
    for (int k1 = 0; k1 < 8; ++k1) {
      for (int k2 = 0; k2 < 8; ++k2) {
        out.push_back(two_atom(lam, std::polar(1.0, 2.0 * kPi * k1 / 8.0),
                               std::polar(1.0, 2.0 * kPi * k2 / 8.0)));
      }
    }
  }
  return out;
}

struct SideBest {
  double value = -1.0;
  SideCand cand;

  void offer(double v, const SideCand& c) {
    if (!std::isfinite(v)) return;
    if (v > value) {
      value = v;
      cand = c;
    }
  }
};

// Deterministic hill climb on atom angles and pairwise weight transfers.
template <typename Score>
void refine_side(SideCand& cand, double& value, const Score& score) {
  double step = 0.5;
  for (int round = 0; round < 24; ++round) {
    bool improved = false;
    for (size_t j = 0; j < cand.x.size(); ++j) {
      for (double sgn : {-1.0, 1.0}) {
        SideCand trial = cand;
        trial.x[j] *= std::polar(1.0, sgn * step);
        trial.refresh();
        const double v = score(trial);
        if (v > value) {
          value = v;
          cand = trial;
          improved = true;
        }
      }
    }
    if (cand.w.size() >= 2) {
      for (size_t j = 0; j + 1 < cand.w.size(); ++j) {
        for (double sgn : {-1.0, 1.0}) {
          SideCand trial = cand;
          const double delta = sgn * step * 0.25;
          trial.w[j] = std::clamp(trial.w[j] + delta, 0.0, 1.0);
          trial.w[j + 1] = std::clamp(trial.w[j + 1] - delta, 0.0, 1.0);
          const double total =
              std::accumulate(trial.w.begin(), trial.w.end(), 0.0);
          if (total <= 0.0) continue;
          for (double& w : trial.w) w /= total;
          trial.refresh();
          const double v = score(trial);
          if (v > value) {
            value = v;
            cand = trial;
            improved = true;
          }
        }
      }
    }
    if (!improved) {
      step *= 0.5;
      if (step < 1e-6) break;
    }
  }
}

CoeffTuple tuple_from_sides(const SideCand& p, const SideCand& q) {
  return CoeffTuple{p.c1, p.c2, q.c1, q.c2};
}

void search_tight_separable(const MonomialForm& f, long long budget,
                            std::uint64_t seed, Evaluator& eval,
                            Best& alignment, Best& stochastic) {
  // Each side's contribution rotates rigidly under atom rotation, so maximize
  // the two sides separately and phase-match the results.
  auto part_p = [&](const SideCand& s) {
    ++eval.count;
    return std::abs(f.p2 * s.c2 + f.p1sq * s.c1 * s.c1);
  };
  auto part_q = [&](const SideCand& s) {
    ++eval.count;
    return std::abs(f.q2 * s.c2 + f.q1sq * s.c1 * s.c1);
  };

  auto steer = [&](const SideCand& s, Complex part_coeff_l, Complex part_coeff_s)
      -> SideCand {
    const Complex part = part_coeff_l * s.c2 + part_coeff_s * s.c1 * s.c1;
    if (part == Complex{}) return s;
    return s.rotated(std::polar(1.0, -0.5 * std::arg(part)));
  };

  const SideCand neutral = two_atom(0.25, Complex{1.0}, Complex{-1.0});
  auto combine_and_offer = [&](const SideCand& sp, const SideCand& sq,
                               Best& into) {
    const SideCand rp = steer(sp, f.p2, f.p1sq);
    const SideCand rq = f.uses_q ? steer(sq, f.q2, f.q1sq) : one_atom({1.0});
    const CoeffTuple t = tuple_from_sides(rp, rq);
    into.offer(eval(t), t);
  };

  SideBest struct_p, struct_q, rand_p, rand_q;
  for (const SideCand& s : structured_sides()) {
    struct_p.offer(part_p(s), s);
    if (f.uses_q) struct_q.offer(part_q(s), s);
  }
  if (!f.uses_q) struct_q.offer(0.0, neutral);

  const long long per_side = std::max<long long>(1, budget / 2);
  for (long long i = 0; i < per_side; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(2 * i)));
    SideCand s = random_side(rng);
    rand_p.offer(part_p(s), s);
    if (f.uses_q) {
      Rng rng_q(derive_seed(seed, static_cast<std::uint64_t>(2 * i + 1)));
      SideCand sq = random_side(rng_q);
      rand_q.offer(part_q(sq), sq);
    }
  }
  if (!f.uses_q) rand_q.offer(0.0, neutral);

  combine_and_offer(struct_p.cand, struct_q.cand, alignment);

  refine_side(rand_p.cand, rand_p.value, part_p);
  if (f.uses_q) refine_side(rand_q.cand, rand_q.value, part_q);
  combine_and_offer(rand_p.cand, rand_q.cand, stochastic);
}

void search_tight_joint(const MonomialForm& f, long long budget,
                        std::uint64_t seed, Evaluator& eval, Best& alignment,
                        Best& stochastic) {
  // The (p1 - q1)^2 term couples the sides; enumerate structured pairs and
  // random pairs jointly, then hill-climb both measures together.
  std::vector<SideCand> sides;
  for (int k = 0; k < 24; ++k) {
    sides.push_back(one_atom(std::polar(1.0, 2.0 * kPi * k / 24.0)));
  }
  for (int k = 0; k < 12; ++k) {
    const Complex x = std::polar(1.0, 2.0 * kPi * k / 12.0);
    sides.push_back(two_atom(0.5, x, -x));
  }
  for (const SideCand& sp : sides) {
    for (const SideCand& sq : sides) {
      const CoeffTuple t = tuple_from_sides(sp, sq);
      alignment.offer(eval(t), t);
    }
  }

  Best rand_best;
  SideCand best_p = sides.front(), best_q = sides.front();
  for (long long i = 0; i < budget; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    SideCand sp = random_side(rng);
    SideCand sq = random_side(rng);
    const CoeffTuple t = tuple_from_sides(sp, sq);
    const double v = eval(t);
    if (v > rand_best.value) {
      rand_best.offer(v, t);
      best_p = sp;
      best_q = sq;
    }
  }
  if (rand_best.value >= 0.0) {
    double value = rand_best.value;
    auto score_p = [&](const SideCand& s) {
      return eval(tuple_from_sides(s, best_q));
    };
    auto score_q = [&](const SideCand& s) {
      return eval(tuple_from_sides(best_p, s));
    };
    for (int outer = 0; outer < 3; ++outer) {
      refine_side(best_p, value, score_p);
      refine_side(best_q, value, score_q);
    }
    const CoeffTuple t = tuple_from_sides(best_p, best_q);
    stochastic.offer(eval(t), t);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Public surface
// ---------------------------------------------------------------------------

const char* to_string(Functional fn) {
  switch (fn) {
    case Functional::Eq17a: return "eq17a";
    case Functional::Eq19: return "eq19";
    case Functional::Eq19_1: return "eq19.1";
    case Functional::Eq19_10: return "eq19.10";
    case Functional::Eq19_31: return "eq19.31";
    case Functional::Eq19_33: return "eq19.33";
    case Functional::Eq19_12: return "eq19.12";
    case Functional::Eq19_32: return "eq19.32";
    case Functional::Eq19_42: return "eq19.42";
    case Functional::Eq7: return "eq7";
    case Functional::Eq8: return "eq8";
    case Functional::Teq7: return "teq7";
    case Functional::Teq8: return "teq8";
    case Functional::Te7: return "te7";
    case Functional::Te8: return "te8";
    case Functional::KeoghMerkes: return "keogh-merkes";
  }
  return "?";
}

std::optional<Functional> functional_from_string(std::string_view token) {
  static constexpr Functional all[] = {
      Functional::Eq17a,  Functional::Eq19,    Functional::Eq19_1,
      Functional::Eq19_10, Functional::Eq19_31, Functional::Eq19_33,
      Functional::Eq19_12, Functional::Eq19_32, Functional::Eq19_42,
      Functional::Eq7,    Functional::Eq8,     Functional::Teq7,
      Functional::Teq8,   Functional::Te7,     Functional::Te8,
      Functional::KeoghMerkes};
  for (Functional fn : all) {
    if (token == to_string(fn)) return fn;
  }
  return std::nullopt;
}

FunctionalTarget functional_target(Functional fn) {
  switch (fn) {
    case Functional::Eq17a:
    case Functional::Eq19:
    case Functional::Eq19_1:
    case Functional::Eq19_10:
    case Functional::Eq19_12:
    case Functional::Eq7:
    case Functional::Teq7:
    case Functional::Te7:
      return FunctionalTarget::A2Sq;
    case Functional::KeoghMerkes:
      return FunctionalTarget::KeoghMerkes;
    default:
      return FunctionalTarget::A3;
  }
}

Complex functional_value(const FunctionalId& id, double lambda, double b1,
                         double b2, const CoeffTuple& t) {
  Complex acc{};
  for (const Term& term : functional_terms(id, lambda, b1, b2)) {
    acc += term.c * monomial_eval(term.m, t);
  }
  return acc;
}

double triangle_bound(const FunctionalId& id, double lambda, double b1,
                      double b2) {
  double acc = 0.0;
  for (const Term& term : functional_terms(id, lambda, b1, b2)) {
    acc += std::abs(term.c) * monomial_radius(term.m);
  }
  return acc;
}

PowerSeries subordination_expand(const PowerSeries& phi,
                                 const CaratheodoryCoeffs& p) {
  if (phi[0] != Complex{1.0}) {
    throw ParameterError("subordination_expand: phi must start at 1");
  }
  const SchwarzCoeffs r = schwarz_from_caratheodory(p);
  const int order = std::min(phi.order(), r.count());
  PowerSeries inner(order);
  for (int k = 1; k <= order; ++k) inner[k] = r.coeff(k);
  return compose(phi.truncated(order), inner);
}

double consistency_scale(BoundClass kind) {
  switch (kind) {
    case BoundClass::MixedSstarR:
    case BoundClass::MixedSstarK:
      return 2.0;
    default:
      return 1.0;
  }
}

SolveResult solve_class_coefficients(const ClassSpec& spec, double b1,
                                     double b2, const CaratheodoryCoeffs& p,
                                     const CaratheodoryCoeffs& q) {
  if (!(b1 > 0.0)) throw ParameterError("solve needs B1 > 0");
  if (p.count() < 2 || q.count() < 2) {
    throw ParameterError("solve needs two coefficients per side");
  }
  if (!validate_caratheodory(p, FeasibilityMode::Box) ||
      !validate_caratheodory(q, FeasibilityMode::Box)) {
    throw FeasibilityError("solve: tuple outside |p_i| <= 2");
  }
  const Complex p1 = p.coeff(1), p2 = p.coeff(2), q1 = q.coeff(1);

  double sp = 1.0, sq = 1.0;
  switch (spec.kind) {
    case BoundClass::RSigma:
      if (!(spec.lambda >= 0.0)) throw ParameterError("lambda must be >= 0");
      sp = sq = 1.0 + spec.lambda;
      break;
    case BoundClass::SstarSigma: sp = 1.0; sq = 1.0; break;
    case BoundClass::KSigma: sp = 2.0; sq = 2.0; break;
    case BoundClass::MixedKR: sp = 2.0; sq = 2.0; break;
    case BoundClass::MixedSstarR: sp = 1.0; sq = 2.0; break;
    case BoundClass::MixedSstarK: sp = 1.0; sq = 2.0; break;
  }

  SolveResult out;
  out.a2 = b1 * p1 / (2.0 * sp);
  const Complex rhs_p =
      0.5 * b1 * (p2 - 0.5 * p1 * p1) + 0.25 * b2 * p1 * p1;
  const Complex a2sq = out.a2 * out.a2;
  switch (spec.kind) {
    case BoundClass::RSigma:
      out.a3 = rhs_p / (1.0 + 2.0 * spec.lambda);
      break;
    case BoundClass::SstarSigma:
    case BoundClass::MixedSstarR:
      out.a3 = (a2sq + rhs_p) / 2.0;
      break;
    case BoundClass::KSigma:
    case BoundClass::MixedKR:
      out.a3 = (4.0 * a2sq + rhs_p) / 6.0;
      break;
    case BoundClass::MixedSstarK:
      out.a3 = (a2sq + rhs_p) / 3.0;
      break;
  }
  out.consistent = std::abs(sq * out.a2 + 0.5 * b1 * q1) <= 1e-12;
  return out;
}

ExtremalResult maximize_functional(const FunctionalId& id, double lambda,
                                   double b1, double b2, FeasibilityMode mode,
                                   long long budget, std::uint64_t seed) {
  if (budget < 1) throw ParameterError("maximize needs budget >= 1");
  if (id.fn != Functional::KeoghMerkes && !(b1 > 0.0)) {
    throw ParameterError("maximize needs B1 > 0");
  }
  const std::vector<Term> terms = functional_terms(id, lambda, b1, b2);
  for (const Term& t : terms) {
    if (!std::isfinite(t.c.real()) || !std::isfinite(t.c.imag())) {
      throw ParameterError(
          "functional is singular for these coefficients (division by zero)");
    }
  }
  const MonomialForm form = combine(terms, id.fn);

  Evaluator eval{form};
  Best alignment, stochastic;
  if (mode == FeasibilityMode::Box) {
    search_box(form, budget, seed, eval, alignment, stochastic);
  } else if (form.diffsq != Complex{}) {
    search_tight_joint(form, budget, seed, eval, alignment, stochastic);
  } else {
    search_tight_separable(form, budget, seed, eval, alignment, stochastic);
  }

  Best overall;
  overall.merge(alignment);
  overall.merge(stochastic);

  ExtremalResult out;
  out.mode = mode;
  out.seed = seed;
  out.budget = eval.count;
  out.triangle_value = triangle_bound(id, lambda, b1, b2);
  out.alignment_value = std::max(alignment.value, 0.0);
  out.stochastic_value = std::max(stochastic.value, 0.0);
  out.argmax = overall.tuple;
  // Pin the reported maximum to the public evaluator at the witness.
  out.max_modulus = std::abs(functional_value(id, lambda, b1, b2, out.argmax));
  return out;
}

std::pair<CaratheodoryCoeffs, CaratheodoryCoeffs> sample_joint_pair(
    double scale, int count, std::uint64_t seed) {
  if (scale != 1.0 && scale != 2.0) {
    throw ParameterError("sample_joint_pair: scale must be 1 or 2");
  }
  if (count < 2) {
    throw ParameterError("sample_joint_pair: count must be >= 2");
  }
  Rng rng(derive_seed(seed, 0x9a17));
  const double mod = (2.0 / scale) * rng.uniform();
  const Complex p1 = std::polar(mod, 2.0 * kPi * rng.uniform());
  CaratheodoryCoeffs p =
      sample_caratheodory_with_p1(p1, count, derive_seed(seed, 1));
  CaratheodoryCoeffs q =
      sample_caratheodory_with_p1(-scale * p1, count, derive_seed(seed, 2));
  return {std::move(p), std::move(q)};
}

}  // namespace bicoeff
