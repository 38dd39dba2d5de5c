#pragma once

#include <Eigen/Core>

#include <cstdint>

namespace trigmeans {

using Eigen::ArrayXd;

/// Smallest 1-based index i such that values[j] >= values[j+1] for all
/// j >= i within the list; the last index if nothing earlier qualifies.
/// Rejects negative entries.
int detect_n0(const ArrayXd& values);

/// Nonnegative sequence (rho_k^2, 1-based) together with its detected
/// monotone start index, so the invariant "non-increasing from n0" holds
/// by construction for any input.
struct MonotoneSeq {
  ArrayXd values;
  int n0 = 1;

  static MonotoneSeq make(ArrayXd values);
  int size() const { return static_cast<int>(values.size()); }
  double at(int k) const { return values[k - 1]; }
};

/// Direct and block-regrouped evaluations of one sign sum, plus the sum
/// of absolute term magnitudes that scales the floating-point tolerance.
struct SignSums {
  double direct = 0.0;
  double grouped = 0.0;
  double magnitude = 0.0;
};

inline double fp_tolerance(const SignSums& s) {
  return 1e-12 * (1.0 + s.magnitude);
}

/// sum_{k=n}^{(2L+1)n-1} (v_k / k) sin(k pi / n), directly and regrouped
/// over L blocks of 2n as
/// sum_l sum_j [v_{2nl+j}/(2nl+j) - v_{(2l-1)n+j}/((2l-1)n+j)] sin(j pi/n).
/// Under v_k/k non-increasing on the window the grouped form is termwise
/// <= 0.  Window must end exactly at complete blocks.
SignSums sign_sum_1(const MonotoneSeq& seq, int n, int L);

/// sum_{k=n}^{(L+1)n-1} (v_k / k) sin(2k pi / n), directly and regrouped
/// per block of n as
/// sum_l sum_j [v_{ln+j}/(ln+j) - v_{(l+1)n-j}/((l+1)n-j)] sin(2j pi/n),
/// j = 1..floor(n/2) for odd n, 1..n/2-1 for even n (the j = n/2 term
/// vanishes).  Termwise >= 0 under monotonicity.  Requires n >= 2.
SignSums sign_sum_2(const MonotoneSeq& seq, int n, int L);

/// max_{1<=k<=n} (k/n)^2 - sin^2(k pi / (2n)); <= 0 for every n since
/// sin x >= 2x/pi on [0, pi/2].
double chui_max_violation(int n);

inline bool chui_check(int n) { return chui_max_violation(n) <= 0.0; }

enum class SeqFamily { harmonic_like, geometric, random_gaps };

const char* seq_family_name(SeqFamily f);

struct GeneratedSeq {
  MonotoneSeq seq;
  int declared_n0 = 1;  // randomly placed; detect_n0 may find an earlier one
  SeqFamily family = SeqFamily::harmonic_like;
  std::uint64_t seed = 0;
};

/// Deterministic per seed.  Nonnegative values, non-increasing from a
/// randomly placed n0 <= Kmax/4 (further capped by n0_cap when > 0);
/// entries before n0 are arbitrary nonnegative.
GeneratedSeq random_monotone_seq(std::uint64_t seed, int Kmax,
                                 SeqFamily family, int n0_cap = 0);

/// Copy of base with values[k] replaced, n0 re-detected.
MonotoneSeq with_spike(const MonotoneSeq& base, int k, double magnitude);

/// One sign-lemma evaluation.
struct LemmaTrial {
  std::uint64_t seed = 0;
  SeqFamily family = SeqFamily::harmonic_like;
  bool adversarial = false;
  int n = 2;
  int L = 1;
  int n0 = 1;
  bool has_sum2 = true;  // sign_sum_2 needs n >= 2
  SignSums s1;
  SignSums s2;

  bool monotone_regime() const { return n0 <= n; }
  bool sign1_ok() const { return s1.direct <= fp_tolerance(s1); }
  bool sign2_ok() const {
    return !has_sum2 || s2.direct >= -fp_tolerance(s2);
  }
  bool grouping_ok() const;
};

/// Seeded trial with n in 2..32, L in 1..8 and a sequence whose declared
/// n0 does not exceed n (monotone regime by construction).  force_n /
/// force_L pin the parameters when positive.
LemmaTrial random_trial(std::uint64_t master_seed, int index, int force_n = 0,
                        int force_L = 0);

/// Same, but with a random spike injected somewhere in the sign_sum_1
/// window; most draws break monotonicity and many flip the first sign.
LemmaTrial spike_trial(std::uint64_t master_seed, int index, int force_n = 0,
                       int force_L = 0);

}  // namespace trigmeans
