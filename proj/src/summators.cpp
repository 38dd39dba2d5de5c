#include "trigmeans/summators.hpp"

#include <cmath>
#include <stdexcept>

namespace trigmeans {

const char* mean_kind_name(MeanKind kind) {
  switch (kind) {
    case MeanKind::partial: return "partial";
    case MeanKind::fejer: return "fejer";
    case MeanKind::vallee_poussin: return "vp";
  }
  return "?";
}

TrigPoly partial_sum(const FourierSeries& s, int n) {
  if (n < 0) throw std::invalid_argument("partial_sum: n must be >= 0");
  if (n > s.max_degree())
    throw std::invalid_argument("partial_sum: n exceeds the stored degree");
  return {s.a0, s.rho.head(n), s.phi.head(n)};
}

TrigPoly fejer_mean(const FourierSeries& s, int n) {
  if (n < 1) throw std::invalid_argument("fejer_mean: n must be >= 1");
  if (n > s.max_degree() + 1)
    throw std::invalid_argument("fejer_mean: n exceeds the stored degree + 1");
  const int d = n - 1;
  ArrayXd w(d);
  // (n-k)/n rather than 1 - k/n: single rounding, and bitwise identical
  // to the dlVP multiplier at m = 0.
  for (int k = 1; k <= d; ++k) w[k - 1] = static_cast<double>(n - k) / n;
  return {s.a0, s.rho.head(d) * w, s.phi.head(d)};
}

TrigPoly vallee_poussin_mean(const FourierSeries& s, int m, int n) {
  if (m < 0 || m >= n)
    throw std::invalid_argument("vallee_poussin_mean: need 0 <= m < n");
  if (n > s.max_degree() + 1)
    throw std::invalid_argument(
        "vallee_poussin_mean: n exceeds the stored degree + 1");
  const int d = n - 1;
  ArrayXd w(d);
  for (int k = 1; k <= d; ++k)
    w[k - 1] = k <= m ? 1.0 : static_cast<double>(n - k) / (n - m);
  return {s.a0, s.rho.head(d) * w, s.phi.head(d)};
}

TrigPoly apply_mean(const FourierSeries& s, const MeanSpec& spec) {
  switch (spec.kind) {
    case MeanKind::partial: return partial_sum(s, spec.n);
    case MeanKind::fejer: return fejer_mean(s, spec.n);
    case MeanKind::vallee_poussin:
      return vallee_poussin_mean(s, spec.m, spec.n);
  }
  throw std::invalid_argument("apply_mean: unknown kind");
}

ArrayXd averaging_oracle(const FourierSeries& s, int m, int n,
                         const ArrayXd& grid) {
  if (m < 0 || m >= n)
    throw std::invalid_argument("averaging_oracle: need 0 <= m < n");
  if (n > s.max_degree() + 1)
    throw std::invalid_argument(
        "averaging_oracle: S_{n-1} exceeds the stored degree");
  const auto P = grid.size();
  // S_j built term by term from the (alpha, beta) ledger; each partial sum
  // is the previous one plus its new harmonic.
  ArrayXd sj = ArrayXd::Constant(P, 0.5 * s.a0);
  for (int k = 1; k <= m; ++k) {
    const ArrayXd kx = k * grid;
    sj += s.alpha[k - 1] * kx.cos() + s.beta[k - 1] * kx.sin();
  }
  ArrayXd acc = sj;  // S_m
  for (int j = m + 1; j < n; ++j) {
    const ArrayXd kx = j * grid;
    sj += s.alpha[j - 1] * kx.cos() + s.beta[j - 1] * kx.sin();
    acc += sj;
  }
  return acc / static_cast<double>(n - m);
}

namespace {

// Shared accumulation for both ledgers: weight 0 for k <= m,
// (k-m)/(n-m) for m < k < n, 1 for k >= n.  Identical code path and
// summation order keep the Fejer (m = 0) and dlVP values comparable
// term for term in floating point; the domination check is
// zero-tolerance.
double weighted_error_sum(const FourierSeries& s, int n, int m) {
  double acc = 0.0;
  for (int k = m + 1; k < n; ++k) {
    const double w = static_cast<double>(k - m) / (n - m);
    const double r = s.rho[k - 1];
    acc += w * w * (r * r);
  }
  for (int k = n; k <= s.max_degree(); ++k) {
    const double r = s.rho[k - 1];
    acc += r * r;
  }
  return acc;
}

void require_certified_tail(const FourierSeries& s, const char* what) {
  if (!s.tail_certified)
    throw std::invalid_argument(std::string(what) +
                                ": series has no certified tail bound");
}

}  // namespace

ErrorLedger fejer_error_sq(const FourierSeries& s, int n) {
  require_certified_tail(s, "fejer_error_sq");
  if (n < 1) throw std::invalid_argument("fejer_error_sq: n must be >= 1");
  if (n > s.max_degree())
    throw std::invalid_argument(
        "fejer_error_sq: the tail split at k = n needs n <= K");
  return {weighted_error_sum(s, n, 0), s.tail_energy_bound};
}

ErrorLedger vp_error_sq(const FourierSeries& s, int m, int n) {
  require_certified_tail(s, "vp_error_sq");
  if (m < 0 || m >= n)
    throw std::invalid_argument("vp_error_sq: need 0 <= m < n");
  if (n > s.max_degree())
    throw std::invalid_argument(
        "vp_error_sq: the tail split at k = n needs n <= K");
  return {weighted_error_sum(s, n, m), s.tail_energy_bound};
}

double residual_quadrature_error_sq(const std::function<double(double)>& f,
                                    const TrigPoly& p, int N) {
  if (N < 4 * (p.degree() + 1))
    throw std::invalid_argument(
        "residual_quadrature_error_sq: need N >= 4*(degree+1)");
  const ArrayXd x = quadrature_grid(N);
  const ArrayXd pv = p.on_grid(x);
  double acc = 0.0;
  for (int j = 0; j < N; ++j) {
    const double d = f(x[j]) - pv[j];
    acc += d * d;
  }
  return 2.0 / N * acc;
}

}  // namespace trigmeans
