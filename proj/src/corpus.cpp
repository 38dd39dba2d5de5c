#include "trigmeans/corpus.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace trigmeans {

double modified_bessel_i(int k) {
  if (k < 0) throw std::invalid_argument("modified_bessel_i: k must be >= 0");
  double term = 1.0;
  for (int i = 1; i <= k; ++i) term /= 2.0 * i;  // 1 / (k! 2^k)
  double sum = 0.0;
  int m = 0;
  while (term >= 1e-18) {
    sum += term;
    term /= 4.0 * (m + 1) * (m + k + 1);
    ++m;
  }
  return sum;
}

namespace {

double wrap_2pi(double x) {
  x = std::fmod(x, kTwoPi);
  if (x < 0.0) x += kTwoPi;
  return x;
}

// (pi - x)/2 on (0, 2pi); the jump at x = 0 takes the Fourier midpoint
// value 0.
double sawtooth_eval(double x) {
  x = wrap_2pi(x);
  return x == 0.0 ? 0.0 : 0.5 * (kPi - x);
}

CorpusFunction make_sawtooth() {
  CorpusFunction f;
  f.id = "sawtooth";
  f.description = "(pi-x)/2 on (0 2pi); beta_k = 1/k";
  f.a0 = 0.0;
  f.evaluator = sawtooth_eval;
  f.coeff_rule = [](int k) { return std::pair{0.0, 1.0 / k}; };
  // sum_{k>K} 1/k^2 < 1/K
  f.tail_rule = [](int K) { return 1.0 / K; };
  f.n0 = 1;
  return f;
}

CorpusFunction make_geometric(double r, const std::string& id) {
  CorpusFunction f;
  f.id = id;
  f.description = "sum r^k cos(kx) with r = " + std::to_string(r).substr(0, 3);
  f.a0 = 0.0;
  // sum r^k cos(kx) = Re(r e^{ix} / (1 - r e^{ix}))
  f.evaluator = [r](double x) {
    const double c = std::cos(x);
    return (r * c - r * r) / (1.0 - 2.0 * r * c + r * r);
  };
  f.coeff_rule = [r](int k) { return std::pair{std::pow(r, k), 0.0}; };
  // geometric tail, exact: sum_{k>K} r^{2k} = r^{2K+2} / (1 - r^2)
  f.tail_rule = [r](int K) { return std::pow(r, 2 * K + 2) / (1.0 - r * r); };
  f.n0 = 1;
  return f;
}

CorpusFunction make_exp_cos() {
  CorpusFunction f;
  f.id = "exp_cos";
  f.description = "exp(cos x); alpha_k = 2 I_k(1)";
  f.a0 = 2.0 * modified_bessel_i(0);
  f.evaluator = [](double x) { return std::exp(std::cos(x)); };
  f.coeff_rule = [](int k) {
    return std::pair{2.0 * modified_bessel_i(k), 0.0};
  };
  // rho_{k+1}/rho_k = I_{k+1}(1)/I_k(1) <= 1/(2(k+1)), so the squared
  // amplitudes beyond K are dominated by a ratio-1/16 geometric series.
  f.tail_rule = [](int K) {
    const double r = 2.0 * modified_bessel_i(K + 1);
    return 16.0 / 15.0 * r * r;
  };
  f.n0 = 1;
  return f;
}

CorpusFunction make_abs_sin() {
  CorpusFunction f;
  f.id = "abs_sin";
  f.description = "|sin x|; alpha_k = -4/(pi(k^2-1)) at even k only";
  f.a0 = 4.0 / kPi;
  f.evaluator = [](double x) { return std::abs(std::sin(x)); };
  f.coeff_rule = [](int k) {
    if (k % 2 != 0) return std::pair{0.0, 0.0};
    return std::pair{-4.0 / (kPi * (static_cast<double>(k) * k - 1.0)), 0.0};
  };
  // rho_{2j}^2 = 16/(pi^2 (4j^2-1)^2) <= 16/(9 pi^2 j^4); bound the j-sum
  // past J0 = floor(K/2)+1 by J0^-4 + integral.
  f.tail_rule = [](int K) {
    const double J0 = K / 2 + 1;
    return 16.0 / (9.0 * kPi * kPi) *
           (1.0 / (J0 * J0 * J0 * J0) + 1.0 / (3.0 * J0 * J0 * J0));
  };
  f.n0 = 0;  // interleaved zeros: rho_k^2 is never eventually non-increasing
  f.hypothesis_ok = false;
  return f;
}

CorpusFunction make_pure_cosine() {
  CorpusFunction f;
  f.id = "pure_cosine";
  f.description = "cos x";
  f.a0 = 0.0;
  f.evaluator = [](double x) { return std::cos(x); };
  f.coeff_rule = [](int k) { return std::pair{k == 1 ? 1.0 : 0.0, 0.0}; };
  f.tail_rule = [](int) { return 0.0; };
  f.n0 = 1;
  return f;
}

CorpusFunction make_constant() {
  CorpusFunction f;
  f.id = "constant";
  f.description = "f = 1 (a0 = 2)";
  f.a0 = 2.0;
  f.evaluator = [](double) { return 1.0; };
  f.coeff_rule = [](int) { return std::pair{0.0, 0.0}; };
  f.tail_rule = [](int) { return 0.0; };
  f.n0 = 1;
  return f;
}

std::vector<CorpusFunction> build_entries() {
  std::vector<CorpusFunction> entries;
  entries.push_back(make_sawtooth());
  entries.push_back(make_geometric(0.5, "geometric_05"));
  entries.push_back(make_geometric(0.9, "geometric_09"));
  entries.push_back(make_exp_cos());
  entries.push_back(make_abs_sin());
  entries.push_back(make_pure_cosine());
  entries.push_back(make_constant());
  entries.push_back(make_unit_poly(3));
  entries.push_back(make_unit_poly(5));
  return entries;
}

}  // namespace

CorpusFunction make_unit_poly(int degree) {
  if (degree < 1)
    throw std::invalid_argument("make_unit_poly: degree must be >= 1");
  CorpusFunction f;
  f.id = "poly" + std::to_string(degree);
  f.description = "sum_{k<=" + std::to_string(degree) + "} cos(kx)";
  f.a0 = 0.0;
  f.evaluator = [degree](double x) {
    double acc = 0.0;
    for (int k = 1; k <= degree; ++k) acc += std::cos(k * x);
    return acc;
  };
  f.coeff_rule = [degree](int k) {
    return std::pair{k <= degree ? 1.0 : 0.0, 0.0};
  };
  f.tail_rule = [degree](int K) {
    return K >= degree ? 0.0 : static_cast<double>(degree - K);
  };
  f.n0 = 1;
  return f;
}

const std::vector<CorpusFunction>& corpus_entries() {
  static const std::vector<CorpusFunction> entries = build_entries();
  return entries;
}

std::optional<CorpusFunction> find_function(const std::string& id) {
  for (const auto& f : corpus_entries())
    if (f.id == id) return f;
  if (id.size() > 4 && id.rfind("poly", 0) == 0) {
    const std::string digits = id.substr(4);
    if (digits.find_first_not_of("0123456789") == std::string::npos &&
        digits.size() <= 5) {
      const int d = std::stoi(digits);
      if (d >= 1) return make_unit_poly(d);
    }
  }
  return std::nullopt;
}

std::vector<std::string> corpus_ids() {
  std::vector<std::string> ids;
  for (const auto& f : corpus_entries()) ids.push_back(f.id);
  return ids;
}

FourierSeries materialize(const CorpusFunction& f, int K) {
  if (K < 1) throw std::invalid_argument("materialize: K must be >= 1");
  ArrayXd alpha(K), beta(K);
  for (int k = 1; k <= K; ++k) {
    const auto [a, b] = f.coeff_rule(k);
    alpha[k - 1] = a;
    beta[k - 1] = b;
  }
  return FourierSeries::from_coefficients(f.a0, std::move(alpha),
                                          std::move(beta), f.tail_rule(K),
                                          /*tail_certified=*/true);
}

}  // namespace trigmeans
