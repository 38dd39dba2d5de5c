#include "trigmeans/smoothness.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace trigmeans {

namespace {

void require_certified_tail(const FourierSeries& s, const char* what) {
  if (!s.tail_certified)
    throw std::invalid_argument(std::string(what) +
                                ": series has no certified tail bound");
}

}  // namespace

double second_difference_norm_sq(const FourierSeries& s, double t) {
  require_certified_tail(s, "second_difference_norm_sq");
  const int K = s.max_degree();
  if (K == 0) return 0.0;
  const ArrayXd k = ArrayXd::LinSpaced(K, 1.0, K);
  return 4.0 * (s.rho.square() * (1.0 - (k * t).cos()).square()).sum();
}

double omega2(const FourierSeries& s, double delta, int t_points) {
  if (delta < 0.0) throw std::invalid_argument("omega2: delta must be >= 0");
  if (t_points < 2) throw std::invalid_argument("omega2: need t_points >= 2");
  double peak = 0.0;
  for (int i = 0; i < t_points; ++i) {
    const double t = delta * i / (t_points - 1);
    peak = std::max(peak, second_difference_norm_sq(s, t));
  }
  return std::sqrt(peak);
}

double jackson_integral(const FourierSeries& s, int n, int quad_points,
                        int t_points) {
  if (n < 1) throw std::invalid_argument("jackson_integral: n must be >= 1");
  if (quad_points < 4 || quad_points % 2 != 0)
    throw std::invalid_argument("jackson_integral: quad_points must be even and >= 4");
  if (t_points < 2)
    throw std::invalid_argument("jackson_integral: need t_points >= 2");
  // One ascending grid serves both the running max and Simpson: refine the
  // quad_points intervals until the grid has at least t_points nodes.
  int refine = 1;
  if (t_points > quad_points + 1)
    refine = (t_points - 2) / quad_points + 1;
  const int M = refine * quad_points;
  const double h = kPi / n / M;
  double running = 0.0;
  double acc = 0.0;
  for (int i = 0; i <= M; ++i) {
    running = std::max(running, second_difference_norm_sq(s, i * h));
    const double w = (i == 0 || i == M) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    acc += w * running;
  }
  return acc * h / 3.0;
}

double jackson_rhs(const FourierSeries& s, int n, int quad_points,
                   int t_points) {
  const double integral = jackson_integral(s, n, quad_points, t_points);
  return std::sqrt(n / kPi * integral / 6.0);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

BoundReport check_bound(const FourierSeries& s, const MeanSpec& spec,
                        int quad_points, int t_points, int n0) {
  require_certified_tail(s, "check_bound");
  BoundReport r;
  r.kind = spec.kind;
  r.n = spec.n;
  r.n0 = n0;
  r.quadrature_points = quad_points;
  r.t_grid_points = t_points;

  ErrorLedger ledger;
  switch (spec.kind) {
    case MeanKind::fejer:
      ledger = fejer_error_sq(s, spec.n);
      break;
    case MeanKind::vallee_poussin:
      ledger = vp_error_sq(s, spec.m, spec.n);
      r.m = spec.m;
      break;
    default:
      throw std::invalid_argument(
          "check_bound: only fejer and vallee_poussin means have a bound");
  }

  r.lhs = std::sqrt(ledger.value);
  r.lhs_truncation_budget =
      std::sqrt(ledger.value + ledger.truncation_budget) - r.lhs;
  r.rhs = jackson_rhs(s, spec.n, quad_points, t_points);
  if (r.rhs > 0.0)
    r.ratio = r.lhs / r.rhs;
  else
    r.ratio = r.lhs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;

  const double b = r.lhs_truncation_budget;
  if (r.lhs + b <= r.rhs)
    r.verdict = Verdict::holds;
  else if (r.lhs - b > r.rhs)
    r.verdict = Verdict::violated;
  else
    r.verdict = Verdict::inconclusive;
  return r;
}

}  // namespace trigmeans
