#pragma once

#include "trigmeans/spectral.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace trigmeans {

/// A built-in 2pi-periodic test function: pointwise evaluator, analytic
/// coefficient rule, certified tail-energy rule, and the index n0 from
/// which rho_k^2 is non-increasing (0 when no such index exists).
struct CorpusFunction {
  std::string id;
  std::string description;
  double a0 = 0.0;
  std::function<double(double)> evaluator;
  std::function<std::pair<double, double>(int)> coeff_rule;  // k -> (alpha_k, beta_k)
  std::function<double(int)> tail_rule;  // K -> bound on sum_{k>K} rho_k^2
  int n0 = 1;
  bool hypothesis_ok = true;
};

/// The built-in entries: sawtooth, geometric (r = 0.5, 0.9), exp_cos,
/// abs_sin, pure_cosine, constant, and unit-amplitude polynomials.
const std::vector<CorpusFunction>& corpus_entries();

/// Unit-amplitude trigonometric polynomial sum_{k<=d} cos(kx).
CorpusFunction make_unit_poly(int degree);

/// Lookup by id; resolves parametric ids "poly<d>" for any d >= 1.
std::optional<CorpusFunction> find_function(const std::string& id);

std::vector<std::string> corpus_ids();

/// Dense series 1..K from the coefficient rule, with the certified tail
/// bound tail_rule(K).
FourierSeries materialize(const CorpusFunction& f, int K);

/// I_k(1) from the ascending series sum_m 1/(m! (m+k)! 2^(2m+k)),
/// truncated once terms fall below 1e-18.
double modified_bessel_i(int k);

}  // namespace trigmeans
