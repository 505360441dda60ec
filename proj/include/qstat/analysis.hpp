#pragma once

#include <optional>
#include <vector>

#include "qstat/exact_ratio.hpp"
#include "qstat/families.hpp"
#include "qstat/residue.hpp"

namespace qstat {

// Slack applied on top of the proved constants when comparing floating
// magnitudes against them.
inline constexpr double kDerangementBoundSlack = 1e-6;
inline constexpr double kCatalanRatioSlackRel = 1e-9;
inline constexpr double kCatalanRatioSlackAbs = 1e-12;

struct ConvergenceRow {
  unsigned n = 0;
  ExactRatio deviation;
  double deviation_float = 0.0;
  /// |f_n(w^j)| / f_n(1) for j = 1..m-1.
  std::vector<double> filter_magnitudes;
};

/// Per-(n, m) table of exact residue deviations and normalized root-of-unity
/// magnitudes, built through the closed-form polynomial path only (no
/// enumeration), so n can reach the hundreds. Rows are sorted by n.
struct ConvergenceReport {
  Family family = Family::Permutations;
  Statistic statistic = Statistic::MajorIndex;
  int modulus = 0;
  std::vector<ConvergenceRow> rows;
};

/// Builds the report for n in [n_lo, n_hi]. Rows are independent and may be
/// computed on several threads; the result does not depend on the schedule.
/// Throws std::invalid_argument on an empty range or an empty family row.
ConvergenceReport convergence_report(Family f, int m, unsigned n_lo, unsigned n_hi,
                                     unsigned threads = 1);

struct BoundCheckEntry {
  int j = 0;
  double value = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // bound - value
};

struct BoundCheckVerdict {
  unsigned n = 0;
  int modulus = 0;
  double c = 0.0;         // min over 1 <= s <= m-1 of 1 - cos(2*pi*s/m)
  double k_factor = 0.0;  // (2/c)^{(m-2)/2}
  std::vector<BoundCheckEntry> per_j;
  bool pass = false;
};

/// Checks |d_n(w^j)| <= (m-1) * (2/c)^{(m-2)/2} for every 1 <= j <= m-1,
/// with the values taken from the exact residue distribution of d_n(q).
/// Requires n >= m (so that n, n-1, ..., n-m+1 covers a multiple of m);
/// smaller n is reported as std::invalid_argument, not asserted.
BoundCheckVerdict derangement_bound_check(unsigned n, int m);

/// Checks |C_n(w^j)| / C_n(1) <= K * (n+1) * binom(2l+1, l) / binom(2n, n)
/// for every 1 <= j <= m-1, where v = m / gcd(j, m), l = floor(n / v) and
/// K = (2/c)^{(m-2)/2} is a computable constant dominating the per-factor
/// estimates behind the decay of the ratio.
BoundCheckVerdict catalan_ratio_check(unsigned n, int m);

/// Smallest n0 such that the exact deviation is the rational zero for every
/// n0 <= n <= n_max, or nullopt when there is no such onset. Sizes where the
/// family is empty count as unbalanced.
std::optional<unsigned> exact_balance_threshold(Family f, int m, unsigned n_max);

}  // namespace qstat
