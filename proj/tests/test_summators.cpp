#include "trigmeans/summators.hpp"

#include "trigmeans/corpus.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace trigmeans;

namespace {

double u01(std::mt19937_64& gen) { return (gen() >> 11) * 0x1.0p-53; }

FourierSeries sawtooth_series(int K) {
  return materialize(*find_function("sawtooth"), K);
}

FourierSeries random_series(std::mt19937_64& gen, int K) {
  ArrayXd rho(K), phi(K);
  for (int i = 0; i < K; ++i) {
    rho[i] = u01(gen) / (i + 1);
    phi[i] = kPi * (2.0 * u01(gen) - 1.0);
  }
  return FourierSeries::from_amplitudes(2.0 * u01(gen) - 1.0, rho, phi, 0.0,
                                        true);
}

}  // namespace

TEST_CASE("partial_sum") {
  const auto s = sawtooth_series(4);

  const TrigPoly s0 = partial_sum(s, 0);
  CHECK(s0.degree() == 0);
  CHECK(s0(0.3) == 0.0);  // a0/2 with a0 = 0

  const TrigPoly s2 = partial_sum(s, 2);
  CHECK(s2.rho[0] == 1.0);
  CHECK(s2.rho[1] == 0.5);
  CHECK(s2.phi[0] == doctest::Approx(-kPi / 2).epsilon(1e-15));
  CHECK(s2.phi[1] == doctest::Approx(-kPi / 2).epsilon(1e-15));
  // sin(pi/2) + (1/2) sin(pi) = 1
  CHECK(s2(kPi / 2) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(partial_sum(s, 5), std::invalid_argument);
  CHECK_THROWS_AS(partial_sum(s, -1), std::invalid_argument);
}

TEST_CASE("partial sums are projections: degree-d input is reproduced for n >= d") {
  std::mt19937_64 gen(5);
  ArrayXd rho = ArrayXd::Zero(6), phi = ArrayXd::Zero(6);
  for (int i = 0; i < 3; ++i) {
    rho[i] = u01(gen);
    phi[i] = kPi * (2.0 * u01(gen) - 1.0);
  }
  const auto s = FourierSeries::from_amplitudes(0.8, rho, phi, 0.0, true);
  const TrigPoly p{0.8, rho.head(3), phi.head(3)};
  for (int n = 3; n <= 6; ++n)
    for (double x : {0.0, 0.9, 4.4})
      CHECK(partial_sum(s, n)(x) == doctest::Approx(p(x)).epsilon(1e-15));
}

TEST_CASE("fejer_mean multipliers") {
  ArrayXd rho = ArrayXd::Constant(6, 1.0), phi = ArrayXd::Zero(6);
  const auto s = FourierSeries::from_amplitudes(0.0, rho, phi, 0.0, true);

  const TrigPoly f4 = fejer_mean(s, 4);
  CHECK(f4.degree() == 3);
  CHECK(f4.rho[0] == 0.75);
  CHECK(f4.rho[1] == 0.5);
  CHECK(f4.rho[2] == 0.25);

  const TrigPoly f1 = fejer_mean(s, 1);
  CHECK(f1.degree() == 0);

  CHECK_NOTHROW(fejer_mean(s, 7));  // n = K + 1: multipliers vanish at k = n
  CHECK_THROWS_AS(fejer_mean(s, 8), std::invalid_argument);
  CHECK_THROWS_AS(fejer_mean(s, 0), std::invalid_argument);

  // strictly decreasing multipliers
  std::mt19937_64 gen(3);
  const auto r = random_series(gen, 12);
  const TrigPoly f9 = fejer_mean(r, 9);
  for (int k = 1; k < f9.degree(); ++k) {
    const double wk = f9.rho[k - 1] / std::max(r.rho[k - 1], 1e-300);
    const double wk1 = f9.rho[k] / std::max(r.rho[k], 1e-300);
    CHECK(wk > wk1);
  }
}

TEST_CASE("vallee_poussin_mean multipliers") {
  ArrayXd rho = ArrayXd::Constant(6, 1.0), phi = ArrayXd::Zero(6);
  const auto s = FourierSeries::from_amplitudes(0.0, rho, phi, 0.0, true);

  const TrigPoly v = vallee_poussin_mean(s, 2, 5);
  CHECK(v.degree() == 4);
  CHECK(v.rho[0] == 1.0);
  CHECK(v.rho[1] == 1.0);
  CHECK(v.rho[2] == 2.0 / 3.0);
  CHECK(v.rho[3] == 1.0 / 3.0);

  CHECK_THROWS_AS(vallee_poussin_mean(s, 5, 5), std::invalid_argument);
  CHECK_THROWS_AS(vallee_poussin_mean(s, -1, 5), std::invalid_argument);
  CHECK_THROWS_AS(vallee_poussin_mean(s, 2, 8), std::invalid_argument);
}

TEST_CASE("multiplier shape: 1 on [1, m], then linear down to zero at k = n") {
  std::mt19937_64 gen(57);
  ArrayXd rho = ArrayXd::Constant(40, 1.0), phi = ArrayXd::Zero(40);
  const auto s = FourierSeries::from_amplitudes(0.0, rho, phi, 0.0, true);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + int(u01(gen) * 39);
    const int m = int(u01(gen) * n);
    const TrigPoly v = vallee_poussin_mean(s, m, n);
    REQUIRE(v.degree() == n - 1);
    for (int k = 1; k <= m; ++k) REQUIRE(v.rho[k - 1] == 1.0);
    for (int k = m + 1; k < n; ++k) {
      REQUIRE(v.rho[k - 1] ==
              doctest::Approx(double(n - k) / (n - m)).epsilon(1e-15));
      if (k > m + 1) REQUIRE(v.rho[k - 1] < v.rho[k - 2]);
    }
    // the line through the decaying part hits zero at k = n
    if (n - m >= 2)
      REQUIRE(v.rho[n - 2] == doctest::Approx(1.0 / (n - m)).epsilon(1e-15));
  }
}

TEST_CASE("vp with m = 0 gives bitwise the Fejer coefficients") {
  std::mt19937_64 gen(17);
  const auto s = random_series(gen, 20);
  for (int n : {1, 2, 7, 20, 21}) {
    const TrigPoly f = fejer_mean(s, n);
    const TrigPoly v = vallee_poussin_mean(s, 0, n);
    REQUIRE(f.degree() == v.degree());
    for (int i = 0; i < f.degree(); ++i) {
      REQUIRE(f.rho[i] == v.rho[i]);
      REQUIRE(f.phi[i] == v.phi[i]);
    }
  }
}

TEST_CASE("vp reproduces a degree-d polynomial once m >= d") {
  std::mt19937_64 gen(23);
  const auto s = random_series(gen, 4);
  const TrigPoly v = vallee_poussin_mean(s, 4, 5);
  for (double x : {0.1, 2.0, 5.9})
    CHECK(v(x) == doctest::Approx(partial_sum(s, 4)(x)).epsilon(1e-15));
}

TEST_CASE("averaging oracle agrees with the coefficient-form means") {
  const ArrayXd grid = sampling_grid(1024);
  for (const char* id : {"sawtooth", "geometric_09", "exp_cos"}) {
    const auto s = materialize(*find_function(id), 32);
    for (int n = 1; n <= 10; ++n) {
      const ArrayXd fejer = fejer_mean(s, n).on_grid(grid);
      const ArrayXd oracle = averaging_oracle(s, 0, n, grid);
      REQUIRE((fejer - oracle).abs().maxCoeff() <= 1e-10);
      for (int m = 1; m < n; ++m) {
        const ArrayXd vp = vallee_poussin_mean(s, m, n).on_grid(grid);
        const ArrayXd vo = averaging_oracle(s, m, n, grid);
        REQUIRE((vp - vo).abs().maxCoeff() <= 1e-10);
      }
    }
  }
}

TEST_CASE("averaging oracle: m = 0, n = 1 is the constant a0/2") {
  ArrayXd rho(2), phi(2);
  rho << 0.4, 0.2;
  phi << 0.0, 1.0;
  const auto s = FourierSeries::from_amplitudes(3.0, rho, phi, 0.0, true);
  const ArrayXd vals = averaging_oracle(s, 0, 1, sampling_grid(16));
  CHECK((vals - 1.5).abs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(averaging_oracle(s, 1, 1, sampling_grid(16)),
                  std::invalid_argument);
  CHECK_THROWS_AS(averaging_oracle(s, 0, 4, sampling_grid(16)),
                  std::invalid_argument);
}

TEST_CASE("fejer_error_sq closed forms") {
  const auto saw = sawtooth_series(4096);
  const auto e2 = fejer_error_sq(saw, 2);
  const double exact = kPi * kPi / 6.0 - 0.75;
  CHECK(e2.value <= exact);
  CHECK(e2.value + e2.truncation_budget >= exact);
  CHECK(e2.truncation_budget == 1.0 / 4096);

  const auto cosx = materialize(*find_function("pure_cosine"), 16);
  for (int n = 2; n <= 6; ++n)
    CHECK(fejer_error_sq(cosx, n).value ==
          doctest::Approx(1.0 / (double(n) * n)).epsilon(1e-15));

  const auto constant = materialize(*find_function("constant"), 8);
  CHECK(fejer_error_sq(constant, 3).value == 0.0);

  CHECK_THROWS_AS(fejer_error_sq(saw, 4097), std::invalid_argument);
  CHECK_THROWS_AS(fejer_error_sq(saw, 0), std::invalid_argument);

  const auto sampled = coefficients_from_samples(ArrayXd::Constant(64, 1.0), 8);
  CHECK_THROWS_AS(fejer_error_sq(sampled, 2), std::invalid_argument);
}

TEST_CASE("vp_error_sq closed forms") {
  const auto saw = sawtooth_series(4096);
  const auto e = vp_error_sq(saw, 1, 3);
  const double exact = 1.0 / 16.0 + kPi * kPi / 6.0 - 1.25;
  CHECK(e.value <= exact);
  CHECK(e.value + e.truncation_budget >= exact);

  // m = 0 reduces to the Fejer ledger exactly
  for (int n : {1, 2, 9, 40})
    CHECK(vp_error_sq(saw, 0, n).value == fejer_error_sq(saw, n).value);

  const auto p3 = materialize(*find_function("poly3"), 16);
  CHECK(vp_error_sq(p3, 3, 8).value == 0.0);

  CHECK_THROWS_AS(vp_error_sq(saw, 3, 3), std::invalid_argument);
}

TEST_CASE("residual quadrature oracle") {
  std::mt19937_64 gen(31);
  const auto s = random_series(gen, 5);
  const TrigPoly p = partial_sum(s, 5);
  CHECK(residual_quadrature_error_sq([&](double x) { return p(x); }, p, 64) <=
        1e-25);

  const auto cosx = materialize(*find_function("pure_cosine"), 4);
  const TrigPoly f2 = fejer_mean(cosx, 2);
  CHECK(residual_quadrature_error_sq([](double x) { return std::cos(x); }, f2,
                                     64) ==
        doctest::Approx(0.25).epsilon(1e-12));

  CHECK_THROWS_AS(residual_quadrature_error_sq([](double) { return 0.0; }, f2, 4),
                  std::invalid_argument);
}

TEST_CASE("ledger matches the quadrature oracle within budget: sawtooth n = 8") {
  const auto f = *find_function("sawtooth");
  const auto s = materialize(f, 4096);
  const auto ledger = fejer_error_sq(s, 8);
  const double quad =
      residual_quadrature_error_sq(f.evaluator, fejer_mean(s, 8), 16384);
  CHECK(std::abs(ledger.value - quad) <=
        1e-6 * ledger.value + ledger.truncation_budget);
}

TEST_CASE("domination: vp error never exceeds the Fejer error, zero tolerance") {
  std::mt19937_64 gen(41);
  std::vector<FourierSeries> pool;
  for (const char* id : {"sawtooth", "geometric_09", "abs_sin", "poly5"})
    pool.push_back(materialize(*find_function(id), 256));
  for (int i = 0; i < 4; ++i) pool.push_back(random_series(gen, 256));
  for (const auto& s : pool)
    for (int n = 2; n <= 24; ++n) {
      const double fej = fejer_error_sq(s, n).value;
      for (int m = 0; m < n; ++m)
        REQUIRE(vp_error_sq(s, m, n).value <= fej);
    }
}

TEST_CASE("Fejer ledger error is non-increasing in n") {
  for (const auto& f : corpus_entries()) {
    const auto s = materialize(f, 256);
    double prev = fejer_error_sq(s, 1).value;
    for (int n = 2; n <= 48; ++n) {
      const double cur = fejer_error_sq(s, n).value;
      REQUIRE(cur <= prev);
      prev = cur;
    }
  }
}

TEST_CASE("apply_mean dispatches on the spec") {
  const auto s = sawtooth_series(8);
  CHECK(apply_mean(s, {MeanKind::partial, 3, 0}).degree() == 3);
  CHECK(apply_mean(s, {MeanKind::fejer, 3, 0}).degree() == 2);
  CHECK(apply_mean(s, {MeanKind::vallee_poussin, 5, 2}).degree() == 4);
}
