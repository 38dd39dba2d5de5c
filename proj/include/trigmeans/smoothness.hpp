#pragma once

#include "trigmeans/summators.hpp"

#include <optional>
#include <string>

namespace trigmeans {

/// ||f(x-t) - 2f(x) + f(x+t)||^2 = 4 sum_k rho_k^2 (1 - cos kt)^2 over the
/// stored harmonics; the constant term plays no role.  Requires a
/// certified tail (the discarded part contributes at most
/// 16 * tail_energy_bound).
double second_difference_norm_sq(const FourierSeries& s, double t);

/// Second modulus of smoothness: max of sqrt(second_difference_norm_sq)
/// over the uniform grid {0, ..., delta} with t_points nodes.  Evenness in
/// t makes the sup over |t| <= delta equal to the sup over [0, delta].
double omega2(const FourierSeries& s, double delta, int t_points);

/// Composite Simpson approximation of int_0^{pi/n} omega2^2(f, t) dt.
/// omega2^2 at each node is the running maximum of
/// second_difference_norm_sq along one shared ascending grid; the Simpson
/// interval count is quad_points refined so the grid carries at least
/// t_points nodes.  quad_points must be even and >= 4.
double jackson_integral(const FourierSeries& s, int n, int quad_points,
                        int t_points);

/// (1/sqrt(6)) * sqrt((n/pi) * jackson_integral).
double jackson_rhs(const FourierSeries& s, int n, int quad_points,
                   int t_points);

enum class Verdict { holds, violated, inconclusive };

const char* verdict_name(Verdict v);

/// One row of the bound explorer: both sides of the claimed Jackson-type
/// inequality for one (function, n, m), with the truncation budget that
/// decides whether the comparison is certified.
struct BoundReport {
  std::string function_id;
  MeanKind kind = MeanKind::fejer;
  int n = 0;
  std::optional<int> m;
  int n0 = 0;  // 0 = unknown / monotone hypothesis not satisfied
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  double lhs_truncation_budget = 0.0;  // norm units
  int quadrature_points = 0;
  int t_grid_points = 0;
  Verdict verdict = Verdict::inconclusive;
};

/// Evaluate the claimed bound for a Fejer or de la Vallee Poussin mean:
/// lhs = sqrt(error ledger), rhs = jackson_rhs.  Reports rather than
/// asserts; n0 is recorded so callers can flag rows with n < n0.  The
/// verdict is: holds if lhs + budget <= rhs, violated if lhs - budget >
/// rhs, inconclusive otherwise.
BoundReport check_bound(const FourierSeries& s, const MeanSpec& spec,
                        int quad_points, int t_points, int n0 = 0);

}  // namespace trigmeans
