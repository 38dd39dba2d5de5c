#include "trigmeans/smoothness.hpp"

#include "trigmeans/corpus.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace trigmeans;

namespace {

double u01(std::mt19937_64& gen) { return (gen() >> 11) * 0x1.0p-53; }

// Independent route: quadrature of the second symmetric difference.
double second_diff_quadrature(const CorpusFunction& f, double t, int N) {
  auto g = [&](double x) {
    return f.evaluator(x - t) - 2.0 * f.evaluator(x) + f.evaluator(x + t);
  };
  return quadrature_norm_sq(g, N);
}

FourierSeries scaled(const FourierSeries& s, double c) {
  return FourierSeries::from_amplitudes(c * s.a0, std::abs(c) * s.rho, s.phi,
                                        c * c * s.tail_energy_bound,
                                        s.tail_certified);
}

}  // namespace

TEST_CASE("second_difference_norm_sq spectral identity") {
  const auto cosx = materialize(*find_function("pure_cosine"), 8);
  CHECK(second_difference_norm_sq(cosx, 0.0) == 0.0);
  CHECK(second_difference_norm_sq(cosx, kPi) ==
        doctest::Approx(16.0).epsilon(1e-12));

  const auto sampled = coefficients_from_samples(ArrayXd::Constant(64, 1.0), 8);
  CHECK_THROWS_AS(second_difference_norm_sq(sampled, 0.5),
                  std::invalid_argument);
}

TEST_CASE("second difference agrees with the quadrature oracle") {
  std::mt19937_64 gen(2026);
  struct Case {
    const char* id;
    int N;
  };
  for (const Case c : {Case{"pure_cosine", 4096}, Case{"geometric_09", 16384},
                       Case{"exp_cos", 16384}, Case{"abs_sin", 1 << 18}}) {
    const auto f = *find_function(c.id);
    const auto s = materialize(f, 2048);
    for (int i = 0; i < 3; ++i) {
      const double t = (1.0 - u01(gen)) * kPi;
      const double spectral = second_difference_norm_sq(s, t);
      const double quad = second_diff_quadrature(f, t, c.N);
      REQUIRE(std::abs(spectral - quad) <=
              1e-8 + 16.0 * s.tail_energy_bound);
    }
  }
}

TEST_CASE("second difference vs quadrature for the discontinuous sawtooth") {
  std::mt19937_64 gen(99);
  const auto f = *find_function("sawtooth");
  const auto s = materialize(f, 4096);
  const double t = (1.0 - u01(gen)) * kPi;
  const double spectral = second_difference_norm_sq(s, t);
  const double quad = second_diff_quadrature(f, t, 1 << 20);
  CHECK(std::abs(spectral - quad) <= 1e-8 + 16.0 * s.tail_energy_bound);
}

TEST_CASE("omega2") {
  const auto cosx = materialize(*find_function("pure_cosine"), 8);
  CHECK(omega2(cosx, 0.0, 5) == 0.0);
  // 4(1 - cos t)^2 increases on [0, pi]; sup at the endpoint
  CHECK(omega2(cosx, kPi / 2, 257) == doctest::Approx(2.0).epsilon(1e-12));

  // non-decreasing in delta
  const auto s = materialize(*find_function("geometric_09"), 256);
  double prev = 0.0;
  for (int i = 1; i <= 12; ++i) {
    const double cur = omega2(s, i * kPi / 12, 129);
    CHECK(cur >= prev);
    prev = cur;
  }

  // sup dominates its argument at every grid node
  for (int i = 0; i <= 8; ++i) {
    const double t = i * kPi / 8;
    CHECK(omega2(s, t, 65) * omega2(s, t, 65) >=
          second_difference_norm_sq(s, t) * (1.0 - 1e-15));
  }

  // 1-homogeneous under scaling of f
  const double base = omega2(s, 1.3, 129);
  CHECK(omega2(scaled(s, 4.0), 1.3, 129) ==
        doctest::Approx(4.0 * base).epsilon(1e-12));
  CHECK(omega2(scaled(s, -0.5), 1.3, 129) ==
        doctest::Approx(0.5 * base).epsilon(1e-12));

  CHECK_THROWS_AS(omega2(cosx, -0.1, 5), std::invalid_argument);
  CHECK_THROWS_AS(omega2(cosx, 1.0, 1), std::invalid_argument);
}

TEST_CASE("jackson_integral: closed form for cos x at n = 2") {
  const auto cosx = materialize(*find_function("pure_cosine"), 8);
  // integral of 4(1 - cos t)^2 over [0, pi/2] = 3 pi - 8
  CHECK(jackson_integral(cosx, 2, 512, 513) ==
        doctest::Approx(3.0 * kPi - 8.0).epsilon(1e-9));

  const auto constant = materialize(*find_function("constant"), 8);
  CHECK(jackson_integral(constant, 3, 512, 513) == 0.0);

  CHECK_THROWS_AS(jackson_integral(cosx, 0, 512, 513), std::invalid_argument);
  CHECK_THROWS_AS(jackson_integral(cosx, 2, 511, 513), std::invalid_argument);
  CHECK_THROWS_AS(jackson_integral(cosx, 2, 2, 513), std::invalid_argument);
}

TEST_CASE("jackson_integral refinement stability") {
  for (const char* id : {"sawtooth", "geometric_09", "exp_cos"}) {
    const auto s = materialize(*find_function(id), 512);
    for (int n : {2, 8, 64}) {
      const double base = jackson_integral(s, n, 512, 513);
      const double fine = jackson_integral(s, n, 1024, 1025);
      REQUIRE(std::abs(fine - base) <= 1e-6 * std::abs(base));
    }
  }
}

TEST_CASE("jackson_rhs") {
  const auto cosx = materialize(*find_function("pure_cosine"), 8);
  CHECK(jackson_rhs(cosx, 2, 512, 513) ==
        doctest::Approx(std::sqrt((3.0 * kPi - 8.0) / (3.0 * kPi)))
            .epsilon(1e-6));

  const auto constant = materialize(*find_function("constant"), 8);
  CHECK(jackson_rhs(constant, 2, 512, 513) == 0.0);

  // 1-homogeneous under scaling of f
  const auto s = materialize(*find_function("geometric_05"), 64);
  const double base = jackson_rhs(s, 4, 128, 129);
  CHECK(jackson_rhs(scaled(s, 2.5), 4, 128, 129) ==
        doctest::Approx(2.5 * base).epsilon(1e-12));
  CHECK(jackson_rhs(scaled(s, -3.0), 4, 128, 129) ==
        doctest::Approx(3.0 * base).epsilon(1e-12));
}

TEST_CASE("check_bound reproduces the pure-cosine counterexample") {
  const auto cosx = materialize(*find_function("pure_cosine"), 16);
  const BoundReport r = check_bound(cosx, {MeanKind::fejer, 2, 0}, 512, 513, 1);
  CHECK(r.lhs == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r.rhs == doctest::Approx(0.3888105410649573).epsilon(1e-4));
  CHECK(r.ratio == doctest::Approx(1.2859733654095211).epsilon(1e-3));
  CHECK(r.verdict == Verdict::violated);
  CHECK(r.lhs_truncation_budget == 0.0);
  CHECK(r.n0 == 1);
  CHECK(r.quadrature_points == 512);
  CHECK(r.t_grid_points == 513);
}

TEST_CASE("check_bound on the zero series holds with equality") {
  const auto zero =
      FourierSeries::from_amplitudes(0.0, ArrayXd::Zero(4), ArrayXd::Zero(4),
                                     0.0, true);
  const BoundReport r = check_bound(zero, {MeanKind::fejer, 2, 0}, 64, 65);
  CHECK(r.lhs == 0.0);
  CHECK(r.rhs == 0.0);
  CHECK(r.ratio == 0.0);
  CHECK(r.verdict == Verdict::holds);
}

TEST_CASE("check_bound turns inconclusive when the budget straddles the comparison") {
  // cos x stored with a deliberately loose certified tail: the lhs interval
  // [sqrt(value), sqrt(value + budget)] then brackets the rhs.
  ArrayXd rho(2), phi(2);
  rho << 1.0, 0.0;
  phi << 0.0, 0.0;
  const auto loose = FourierSeries::from_amplitudes(0.0, rho, phi, 10.0, true);
  const BoundReport r = check_bound(loose, {MeanKind::fejer, 2, 0}, 128, 129);
  CHECK(r.lhs == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r.lhs_truncation_budget > 0.0);
  CHECK(r.verdict == Verdict::inconclusive);
}

TEST_CASE("check_bound rejects partial sums and uncertified tails") {
  const auto cosx = materialize(*find_function("pure_cosine"), 8);
  CHECK_THROWS_AS(check_bound(cosx, {MeanKind::partial, 2, 0}, 64, 65),
                  std::invalid_argument);
  const auto sampled = coefficients_from_samples(ArrayXd::Constant(64, 1.0), 8);
  CHECK_THROWS_AS(check_bound(sampled, {MeanKind::fejer, 2, 0}, 64, 65),
                  std::invalid_argument);
}

TEST_CASE("dlVP report dominates: ratio never above the Fejer ratio") {
  const auto s = materialize(*find_function("sawtooth"), 256);
  for (int n : {2, 5, 9, 16}) {
    const BoundReport fej = check_bound(s, {MeanKind::fejer, n, 0}, 128, 129, 1);
    for (int m = 0; m < n; ++m) {
      const BoundReport vp =
          check_bound(s, {MeanKind::vallee_poussin, n, m}, 128, 129, 1);
      REQUIRE(vp.rhs == fej.rhs);
      REQUIRE(vp.lhs <= fej.lhs);
      REQUIRE(vp.ratio <= fej.ratio);
    }
  }
}

TEST_CASE("check_bound verdict is invariant under rescaling") {
  const auto s = materialize(*find_function("sawtooth"), 128);
  for (int n : {2, 6}) {
    const BoundReport base = check_bound(s, {MeanKind::fejer, n, 0}, 128, 129);
    for (double c : {7.0, -0.125}) {
      const BoundReport r =
          check_bound(scaled(s, c), {MeanKind::fejer, n, 0}, 128, 129);
      REQUIRE(r.verdict == base.verdict);
      REQUIRE(r.ratio == doctest::Approx(base.ratio).epsilon(1e-12));
    }
  }
}
