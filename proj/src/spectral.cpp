#include "trigmeans/spectral.hpp"

#include "trigmeans/report.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace trigmeans {

AmplitudePhase to_amplitude_phase(double alpha, double beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta))
    throw std::invalid_argument("to_amplitude_phase: non-finite input");
  const double rho = std::hypot(alpha, beta);
  if (rho == 0.0) return {0.0, 0.0};
  double phi = std::atan2(-beta, alpha);
  if (phi <= -kPi) phi = kPi;  // keep the branch cut in (-pi, pi]
  return {rho, phi};
}

double Harmonic::amplitude() const { return to_amplitude_phase(alpha, beta).rho; }

double Harmonic::phase() const { return to_amplitude_phase(alpha, beta).phi; }

// Direct per-term cosines, same expression in the scalar and grid paths.
// This keeps evaluation bitwise consistent across both, and makes a mean
// that reproduces its input algebraically (all multipliers exactly 1,
// extra amplitudes exactly 0) cancel against the corpus evaluators to an
// exact floating-point zero.
double TrigPoly::operator()(double x) const {
  double acc = 0.5 * a0;
  for (int i = 0; i < degree(); ++i)
    acc += rho[i] * std::cos((i + 1) * x + phi[i]);
  return acc;
}

ArrayXd TrigPoly::on_grid(const ArrayXd& x) const {
  ArrayXd acc = ArrayXd::Constant(x.size(), 0.5 * a0);
  for (int i = 0; i < degree(); ++i) {
    const double r = rho[i], p = phi[i];
    const int k = i + 1;
    for (Eigen::Index j = 0; j < x.size(); ++j)
      acc[j] += r * std::cos(k * x[j] + p);
  }
  return acc;
}

double evaluate(const TrigPoly& p, double x) { return p(x); }

Harmonic FourierSeries::harmonic(int k) const {
  if (k < 1 || k > max_degree())
    throw std::invalid_argument("FourierSeries::harmonic: index out of range");
  return {k, alpha[k - 1], beta[k - 1]};
}

namespace {

void require_finite(const ArrayXd& a, const char* what) {
  if (!a.isFinite().all())
    throw std::invalid_argument(std::string(what) + ": non-finite coefficient");
}

}  // namespace

FourierSeries FourierSeries::from_coefficients(double a0, ArrayXd alpha,
                                               ArrayXd beta,
                                               double tail_energy_bound,
                                               bool tail_certified) {
  if (alpha.size() != beta.size())
    throw std::invalid_argument("FourierSeries: alpha/beta size mismatch");
  if (!std::isfinite(a0)) throw std::invalid_argument("FourierSeries: non-finite a0");
  require_finite(alpha, "FourierSeries");
  require_finite(beta, "FourierSeries");
  if (!(tail_energy_bound >= 0.0) || !std::isfinite(tail_energy_bound))
    throw std::invalid_argument("FourierSeries: tail bound must be finite and >= 0");
  const int K = static_cast<int>(alpha.size());
  FourierSeries s;
  s.a0 = a0;
  s.alpha = std::move(alpha);
  s.beta = std::move(beta);
  s.rho.resize(K);
  s.phi.resize(K);
  for (int i = 0; i < K; ++i) {
    const auto ap = to_amplitude_phase(s.alpha[i], s.beta[i]);
    s.rho[i] = ap.rho;
    s.phi[i] = ap.phi;
  }
  s.tail_energy_bound = tail_energy_bound;
  s.tail_certified = tail_certified;
  return s;
}

FourierSeries FourierSeries::from_amplitudes(double a0, ArrayXd rho,
                                             ArrayXd phi,
                                             double tail_energy_bound,
                                             bool tail_certified) {
  if (rho.size() != phi.size())
    throw std::invalid_argument("FourierSeries: rho/phi size mismatch");
  require_finite(rho, "FourierSeries");
  require_finite(phi, "FourierSeries");
  if ((rho < 0.0).any())
    throw std::invalid_argument("FourierSeries: negative amplitude");
  FourierSeries s;
  s.a0 = a0;
  s.alpha = rho * phi.cos();
  s.beta = -rho * phi.sin();
  s.rho = std::move(rho);
  s.phi = std::move(phi);
  s.tail_energy_bound = tail_energy_bound;
  s.tail_certified = tail_certified;
  return s;
}

ArrayXd sampling_grid(int N) {
  ArrayXd x(N);
  for (int j = 0; j < N; ++j) x[j] = kTwoPi * j / N;
  return x;
}

ArrayXd quadrature_grid(int N) {
  ArrayXd x(N);
  for (int j = 0; j < N; ++j) x[j] = kTwoPi * (j + 0.5) / N;
  return x;
}

FourierSeries coefficients_from_samples(const ArrayXd& samples, int max_k) {
  const int N = static_cast<int>(samples.size());
  if (max_k < 0)
    throw std::invalid_argument("coefficients_from_samples: max_k must be >= 0");
  if (N < 4 || N < 4 * max_k)
    throw std::invalid_argument(
        "coefficients_from_samples: need N >= max(4, 4*max_k) samples");
  if (!samples.isFinite().all())
    throw std::invalid_argument("coefficients_from_samples: non-finite sample");

  const ArrayXd x = sampling_grid(N);
  const double a0 = 2.0 / N * samples.sum();
  ArrayXd alpha(max_k), beta(max_k);
  for (int k = 1; k <= max_k; ++k) {
    const ArrayXd kx = k * x;
    alpha[k - 1] = 2.0 / N * (samples * kx.cos()).sum();
    beta[k - 1] = 2.0 / N * (samples * kx.sin()).sum();
  }
  return FourierSeries::from_coefficients(a0, std::move(alpha), std::move(beta),
                                          0.0, /*tail_certified=*/false);
}

double ledger_norm_sq(const FourierSeries& s, bool include_a0) {
  double acc = include_a0 ? 0.5 * s.a0 * s.a0 : 0.0;
  for (int i = 0; i < s.max_degree(); ++i) acc += s.rho[i] * s.rho[i];
  return acc;
}

double quadrature_norm_sq(const std::function<double(double)>& f, int N) {
  if (N < 16) throw std::invalid_argument("quadrature_norm_sq: need N >= 16");
  const ArrayXd x = quadrature_grid(N);
  double acc = 0.0;
  for (int j = 0; j < N; ++j) {
    const double v = f(x[j]);
    acc += v * v;
  }
  return 2.0 / N * acc;
}

void write_coefficients_csv(std::ostream& out, const FourierSeries& s) {
  out << "k,alpha,beta,rho,phi\n";
  out << "0," << format_number(s.a0) << ",0,,\n";
  for (int k = 1; k <= s.max_degree(); ++k) {
    out << k << ',' << format_number(s.alpha[k - 1]) << ','
        << format_number(s.beta[k - 1]) << ',' << format_number(s.rho[k - 1])
        << ',' << format_number(s.phi[k - 1]) << '\n';
  }
}

}  // namespace trigmeans
