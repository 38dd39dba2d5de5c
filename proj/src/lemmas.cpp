#include "trigmeans/lemmas.hpp"

#include "trigmeans/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace trigmeans {

int detect_n0(const ArrayXd& values) {
  const int K = static_cast<int>(values.size());
  if (K == 0) throw std::invalid_argument("detect_n0: empty sequence");
  if ((values < 0.0).any())
    throw std::invalid_argument("detect_n0: negative entry");
  int n0 = K;
  for (int i = K - 1; i >= 1; --i) {
    if (values[i - 1] >= values[i])
      n0 = i;
    else
      break;
  }
  return n0;
}

MonotoneSeq MonotoneSeq::make(ArrayXd values) {
  MonotoneSeq s;
  s.n0 = detect_n0(values);
  s.values = std::move(values);
  return s;
}

namespace {

// sin(j pi / n) for j = 0..2n-1, with the mathematically exact zeros at
// j = 0 and j = n pinned to 0.0 so degenerate windows (n = 1) sum to
// exactly zero.  Direct terms index the table by k mod 2n, grouped terms
// by j and n + j, so both forms consume identical sine values.
std::vector<double> half_period_sines(int n) {
  std::vector<double> t(2 * n);
  for (int j = 0; j < 2 * n; ++j) t[j] = std::sin(j * kPi / n);
  t[0] = 0.0;
  t[n] = 0.0;
  return t;
}

// sin(2 j pi / n) for j = 0..n-1; exact zeros at j = 0 and, for even n,
// j = n/2.
std::vector<double> full_period_sines(int n) {
  std::vector<double> t(n);
  for (int j = 0; j < n; ++j) t[j] = std::sin(2.0 * j * kPi / n);
  t[0] = 0.0;
  if (n % 2 == 0) t[n / 2] = 0.0;
  return t;
}

}  // namespace

SignSums sign_sum_1(const MonotoneSeq& seq, int n, int L) {
  if (n < 1) throw std::invalid_argument("sign_sum_1: n must be >= 1");
  if (L < 1) throw std::invalid_argument("sign_sum_1: L must be >= 1");
  const int last = (2 * L + 1) * n - 1;
  if (last > seq.size())
    throw std::invalid_argument(
        "sign_sum_1: sequence does not cover the complete-block window");
  const auto sines = half_period_sines(n);

  SignSums out;
  for (int k = n; k <= last; ++k) {
    const double term = seq.at(k) / k * sines[k % (2 * n)];
    out.direct += term;
    out.magnitude += std::abs(term);
  }
  for (int l = 1; l <= L; ++l) {
    for (int j = 0; j < n; ++j) {
      const int hi = 2 * n * l + j;       // sin(+)
      const int lo = (2 * l - 1) * n + j;  // sin(-)
      out.grouped += (seq.at(hi) / hi - seq.at(lo) / lo) * sines[j];
    }
  }
  return out;
}

SignSums sign_sum_2(const MonotoneSeq& seq, int n, int L) {
  if (n < 2) throw std::invalid_argument("sign_sum_2: n must be >= 2");
  if (L < 1) throw std::invalid_argument("sign_sum_2: L must be >= 1");
  const int last = (L + 1) * n - 1;
  if (last > seq.size())
    throw std::invalid_argument(
        "sign_sum_2: sequence does not cover the complete-block window");
  const auto sines = full_period_sines(n);

  SignSums out;
  for (int k = n; k <= last; ++k) {
    const double term = seq.at(k) / k * sines[k % n];
    out.direct += term;
    out.magnitude += std::abs(term);
  }
  // Pair ln+j with (l+1)n-j; the j = 0 term and, for even n, the j = n/2
  // term carry sin = 0 and are omitted.
  const int jmax = n % 2 == 1 ? n / 2 : n / 2 - 1;
  for (int l = 1; l <= L; ++l) {
    for (int j = 1; j <= jmax; ++j) {
      const int lo = l * n + j;
      const int hi = (l + 1) * n - j;
      out.grouped += (seq.at(lo) / lo - seq.at(hi) / hi) * sines[j];
    }
  }
  return out;
}

double chui_max_violation(int n) {
  if (n < 1) throw std::invalid_argument("chui_max_violation: n must be >= 1");
  double worst = -std::numeric_limits<double>::infinity();
  for (int k = 1; k <= n; ++k) {
    const double a = static_cast<double>(k) / n;
    const double s = std::sin(k * kPi / (2.0 * n));
    worst = std::max(worst, a * a - s * s);
  }
  return worst;
}

const char* seq_family_name(SeqFamily f) {
  switch (f) {
    case SeqFamily::harmonic_like: return "harmonic";
    case SeqFamily::geometric: return "geometric";
    case SeqFamily::random_gaps: return "random_gaps";
  }
  return "?";
}

namespace {

double u01(std::mt19937_64& gen) {
  return (gen() >> 11) * 0x1.0p-53;
}

int uniform_int(std::mt19937_64& gen, int lo, int hi) {
  return lo + static_cast<int>(u01(gen) * (hi - lo + 1));
}

}  // namespace

GeneratedSeq random_monotone_seq(std::uint64_t seed, int Kmax,
                                 SeqFamily family, int n0_cap) {
  if (Kmax < 2) throw std::invalid_argument("random_monotone_seq: Kmax >= 2");
  std::mt19937_64 gen(seed);
  int cap = std::max(1, Kmax / 4);
  if (n0_cap > 0) cap = std::min(cap, n0_cap);
  const int n0 = uniform_int(gen, 1, cap);

  ArrayXd v(Kmax);
  const double scale = 0.1 + 10.0 * u01(gen);
  switch (family) {
    case SeqFamily::harmonic_like: {
      const double p = 1.0 + 2.0 * u01(gen);
      for (int k = n0; k <= Kmax; ++k)
        v[k - 1] = scale / std::pow(k - n0 + 1, p);
      break;
    }
    case SeqFamily::geometric: {
      const double r = 0.05 + 0.9 * u01(gen);
      double x = scale;
      for (int k = n0; k <= Kmax; ++k) {
        v[k - 1] = x;
        x *= r;
      }
      break;
    }
    case SeqFamily::random_gaps: {
      double x = scale;
      for (int k = n0; k <= Kmax; ++k) {
        v[k - 1] = x;
        if (u01(gen) > 0.35) x *= u01(gen);  // else keep a flat run
      }
      break;
    }
  }
  // Arbitrary nonnegative head; typically breaks monotonicity before n0.
  for (int k = 1; k < n0; ++k) v[k - 1] = scale * (0.25 + 2.0 * u01(gen));

  GeneratedSeq out;
  out.seq = MonotoneSeq::make(std::move(v));
  out.declared_n0 = n0;
  out.family = family;
  out.seed = seed;
  return out;
}

MonotoneSeq with_spike(const MonotoneSeq& base, int k, double magnitude) {
  if (k < 1 || k > base.size())
    throw std::invalid_argument("with_spike: index out of range");
  if (!(magnitude >= 0.0))
    throw std::invalid_argument("with_spike: magnitude must be >= 0");
  ArrayXd v = base.values;
  v[k - 1] = magnitude;
  return MonotoneSeq::make(std::move(v));
}

bool LemmaTrial::grouping_ok() const {
  if (std::abs(s1.direct - s1.grouped) > fp_tolerance(s1)) return false;
  if (has_sum2 && std::abs(s2.direct - s2.grouped) > fp_tolerance(s2))
    return false;
  return true;
}

namespace {

std::uint64_t trial_seed(std::uint64_t master_seed, int index) {
  // splitmix64 step over master_seed + index
  std::uint64_t z = master_seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

LemmaTrial make_trial(std::uint64_t master_seed, int index, int force_n,
                      int force_L, bool adversarial) {
  const std::uint64_t seed = trial_seed(master_seed, index);
  std::mt19937_64 gen(seed);
  const int n = force_n > 0 ? force_n : uniform_int(gen, 2, 32);
  const int L = force_L > 0 ? force_L : uniform_int(gen, 1, 8);
  const auto family = static_cast<SeqFamily>(index % 3);
  const int Kmax = (2 * L + 1) * n;  // covers both complete-block windows

  auto generated = random_monotone_seq(gen(), Kmax, family, /*n0_cap=*/n);
  MonotoneSeq seq = std::move(generated.seq);
  if (adversarial) {
    const int k = uniform_int(gen, n, (2 * L + 1) * n - 1);
    const double magnitude =
        seq.values.maxCoeff() * (2.0 + 1022.0 * u01(gen));
    seq = with_spike(seq, k, magnitude);
  }

  LemmaTrial t;
  t.seed = seed;
  t.family = family;
  t.adversarial = adversarial;
  t.n = n;
  t.L = L;
  t.n0 = seq.n0;
  t.s1 = sign_sum_1(seq, n, L);
  t.has_sum2 = n >= 2;
  if (t.has_sum2) t.s2 = sign_sum_2(seq, n, L);
  return t;
}

}  // namespace

LemmaTrial random_trial(std::uint64_t master_seed, int index, int force_n,
                        int force_L) {
  return make_trial(master_seed, index, force_n, force_L, false);
}

LemmaTrial spike_trial(std::uint64_t master_seed, int index, int force_n,
                       int force_L) {
  return make_trial(master_seed, index, force_n, force_L, true);
}

}  // namespace trigmeans
