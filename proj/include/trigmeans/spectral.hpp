#pragma once

#include <Eigen/Core>

#include <functional>
#include <iosfwd>

namespace trigmeans {

using Eigen::ArrayXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// One harmonic alpha*cos(kx) + beta*sin(kx), equivalently
/// rho*cos(kx + phi).
struct Harmonic {
  int k = 1;
  double alpha = 0.0;
  double beta = 0.0;

  double amplitude() const;
  double phase() const;
};

struct AmplitudePhase {
  double rho;
  double phi;
};

/// (alpha, beta) -> (rho, phi) with rho = sqrt(alpha^2 + beta^2),
/// alpha = rho cos(phi), beta = -rho sin(phi), phi in (-pi, pi].
/// Zero amplitude maps to phi = 0.
AmplitudePhase to_amplitude_phase(double alpha, double beta);

/// Finite trigonometric polynomial a0/2 + sum_k rho_k cos(kx + phi_k),
/// stored densely: index i holds harmonic k = i + 1.
struct TrigPoly {
  double a0 = 0.0;
  ArrayXd rho;
  ArrayXd phi;

  int degree() const { return static_cast<int>(rho.size()); }
  double operator()(double x) const;
  /// Values at each grid point.
  ArrayXd on_grid(const ArrayXd& x) const;
};

double evaluate(const TrigPoly& p, double x);

/// Truncated Fourier coefficient ledger.  Harmonics are dense 1..K so
/// operator multipliers are positional.  tail_energy_bound is an upper
/// bound on sum_{k>K} rho_k^2; it is only trusted when tail_certified.
struct FourierSeries {
  double a0 = 0.0;
  ArrayXd alpha;
  ArrayXd beta;
  ArrayXd rho;
  ArrayXd phi;
  double tail_energy_bound = 0.0;
  bool tail_certified = false;

  int max_degree() const { return static_cast<int>(rho.size()); }
  Harmonic harmonic(int k) const;
  ArrayXd rho_sq() const { return rho.square(); }

  /// Build from (alpha, beta) coefficient arrays; converts to
  /// amplitude-phase form once, here.
  static FourierSeries from_coefficients(double a0, ArrayXd alpha, ArrayXd beta,
                                         double tail_energy_bound,
                                         bool tail_certified);
  /// Build from amplitude-phase data directly.
  static FourierSeries from_amplitudes(double a0, ArrayXd rho, ArrayXd phi,
                                       double tail_energy_bound,
                                       bool tail_certified);
};

/// Grid x_j = 2 pi j / N used for coefficient sampling.
ArrayXd sampling_grid(int N);

/// Midpoint-offset grid x_j = 2 pi (j + 1/2) / N used by the quadrature
/// oracles.  The offset keeps the corpus jump points (x = 0 mod 2 pi) at
/// cell centers, where the equal-weight rule retains O(1/N^2) accuracy.
ArrayXd quadrature_grid(int N);

/// Discrete Fourier analysis of N samples taken on sampling_grid(N).
/// Requires N >= 4 and the anti-aliasing margin N >= 4 * max_k.  The
/// result has tail_energy_bound = 0 and tail_certified = false: sampling
/// says nothing about the discarded energy.
FourierSeries coefficients_from_samples(const ArrayXd& samples, int max_k);

/// a0^2/2 (optional) + sum_{k<=K} rho_k^2 under the norm convention
/// ||f||^2 = (1/pi) int_{-pi}^{pi} f^2.  The tail bound is not included;
/// callers add it explicitly.
double ledger_norm_sq(const FourierSeries& s, bool include_a0 = true);

/// (1/pi) int_{-pi}^{pi} f^2 by the N-point equal-weight rule on
/// quadrature_grid(N).  Spectrally accurate for smooth periodic f.
double quadrature_norm_sq(const std::function<double(double)>& f, int N);

/// CSV export `k,alpha,beta,rho,phi`; row 0 is reserved for `0,<a0>,0,,`.
void write_coefficients_csv(std::ostream& out, const FourierSeries& s);

}  // namespace trigmeans
