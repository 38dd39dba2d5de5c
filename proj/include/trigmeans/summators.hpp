#pragma once

#include "trigmeans/spectral.hpp"

namespace trigmeans {

enum class MeanKind { partial, fejer, vallee_poussin };

const char* mean_kind_name(MeanKind kind);

/// Which summation operator to apply: the partial sum S_n, the Fejer mean
/// sigma_{n-1}, or the de la Vallee Poussin mean V_m^{n-1} (m < n).
struct MeanSpec {
  MeanKind kind = MeanKind::fejer;
  int n = 1;
  int m = 0;  // vallee_poussin only
};

/// S_n = a0/2 + sum_{k<=n} rho_k cos(kx + phi_k).  Requires 0 <= n <= K.
TrigPoly partial_sum(const FourierSeries& s, int n);

/// sigma_{n-1}: multiplier (1 - k/n) on harmonics k < n, zero beyond.
/// Requires 1 <= n <= K + 1.
TrigPoly fejer_mean(const FourierSeries& s, int n);

/// V_m^{n-1}: multiplier 1 for k <= m, (n-k)/(n-m) for m < k < n, zero
/// beyond.  Requires 0 <= m < n <= K + 1.
TrigPoly vallee_poussin_mean(const FourierSeries& s, int m, int n);

TrigPoly apply_mean(const FourierSeries& s, const MeanSpec& spec);

/// Literal (S_m + ... + S_{n-1}) / (n - m) evaluated pointwise on the
/// grid, straight from the (alpha, beta) ledger.  m = 0 gives the Fejer
/// oracle.  This is the averaging oracle the coefficient-form means are
/// checked against; it deliberately avoids the amplitude-phase route.
ArrayXd averaging_oracle(const FourierSeries& s, int m, int n,
                         const ArrayXd& grid);

/// Squared-error ledger.  value is exact under the (1/pi) norm
/// convention for the stored harmonics; truncation_budget is the
/// certified energy beyond degree K, reported separately so callers can
/// build certified intervals.
struct ErrorLedger {
  double value = 0.0;
  double truncation_budget = 0.0;
};

/// ||f - sigma_{n-1}||^2 = sum_{k<n} (k/n)^2 rho_k^2 + sum_{k>=n} rho_k^2.
/// Requires n <= K and a certified tail.
ErrorLedger fejer_error_sq(const FourierSeries& s, int n);

/// ||f - V_m^{n-1}||^2 = sum_{m<k<n} ((k-m)/(n-m))^2 rho_k^2
///                       + sum_{k>=n} rho_k^2.
ErrorLedger vp_error_sq(const FourierSeries& s, int m, int n);

/// (1/pi) int (f - p)^2 on quadrature_grid(N); independent oracle for the
/// error ledgers.  Requires N >= 4 * (degree + 1).
double residual_quadrature_error_sq(const std::function<double(double)>& f,
                                    const TrigPoly& p, int N);

}  // namespace trigmeans
