#include "qstat/analysis.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qstat/parallel.hpp"

namespace qstat {

namespace {

void check_modulus(int m) {
  if (m < kMinModulus || m > kMaxModulus)
    throw std::invalid_argument("modulus must be in [" + std::to_string(kMinModulus) + ", " +
                                std::to_string(kMaxModulus) + "]");
}

double min_one_minus_cos(int m) {
  double c = 2.0;
  for (int s = 1; s < m; ++s) {
    c = std::min(c, 1.0 - std::cos(2.0 * std::numbers::pi * s / m));
  }
  return c;
}

ConvergenceRow make_row(Family f, int m, unsigned n) {
  const QPolynomial p = closed_form_gf(f, n);
  const ResidueDistribution d = fold_mod(p, m);
  if (d.total == 0)
    throw std::invalid_argument(std::string(family_name(f)) + " is empty at n = " +
                                std::to_string(n));
  ConvergenceRow row;
  row.n = n;
  row.deviation = deviation(d);
  row.deviation_float = row.deviation.to_double();
  row.filter_magnitudes = normalized_filter_magnitudes(d);
  return row;
}

}  // namespace

ConvergenceReport convergence_report(Family f, int m, unsigned n_lo, unsigned n_hi,
                                     unsigned threads) {
  if (n_lo > n_hi) throw std::invalid_argument("empty size range");
  ConvergenceReport report;
  report.family = f;
  report.statistic = default_statistic(f);
  report.modulus = m;
  report.rows.resize(n_hi - n_lo + 1);
  parallel_for_index(report.rows.size(), threads, [&](std::size_t i) {
    report.rows[i] = make_row(f, m, n_lo + static_cast<unsigned>(i));
  });
  return report;
}

BoundCheckVerdict derangement_bound_check(unsigned n, int m) {
  check_modulus(m);
  if (n < static_cast<unsigned>(m))
    throw std::invalid_argument("derangement bound check requires n >= m");
  const ResidueDistribution d = fold_mod(q_derangement(n), m);
  BoundCheckVerdict verdict;
  verdict.n = n;
  verdict.modulus = m;
  verdict.c = min_one_minus_cos(m);
  verdict.k_factor = std::pow(2.0 / verdict.c, (m - 2) / 2.0);
  const double bound = (m - 1) * verdict.k_factor;
  verdict.pass = true;
  for (int j = 1; j < m; ++j) {
    BoundCheckEntry entry;
    entry.j = j;
    entry.value = std::abs(eval_root_of_unity(d, j));
    entry.bound = bound;
    entry.margin = bound - entry.value;
    if (entry.margin < -kDerangementBoundSlack) verdict.pass = false;
    verdict.per_j.push_back(entry);
  }
  return verdict;
}

BoundCheckVerdict catalan_ratio_check(unsigned n, int m) {
  check_modulus(m);
  if (n < 1) throw std::invalid_argument("catalan ratio check requires n >= 1");
  const ResidueDistribution d = fold_mod(q_catalan(n), m);
  const std::vector<double> magnitudes = normalized_filter_magnitudes(d);
  BoundCheckVerdict verdict;
  verdict.n = n;
  verdict.modulus = m;
  verdict.c = min_one_minus_cos(m);
  verdict.k_factor = std::pow(2.0 / verdict.c, (m - 2) / 2.0);
  verdict.pass = true;
  for (int j = 1; j < m; ++j) {
    const unsigned v = static_cast<unsigned>(m / std::gcd(j, m));
    const unsigned l = n / v;
    BoundCheckEntry entry;
    entry.j = j;
    entry.value = magnitudes[static_cast<std::size_t>(j) - 1];
    entry.bound = verdict.k_factor * (n + 1) *
                  BigRational(binomial(2 * l + 1, l), binomial(2 * n, n)).convert_to<double>();
    entry.margin = entry.bound - entry.value;
    if (entry.value > entry.bound * (1.0 + kCatalanRatioSlackRel) + kCatalanRatioSlackAbs)
      verdict.pass = false;
    verdict.per_j.push_back(entry);
  }
  return verdict;
}

std::optional<unsigned> exact_balance_threshold(Family f, int m, unsigned n_max) {
  std::vector<char> balanced(n_max + 1, 0);
  for (unsigned n = 0; n <= n_max; ++n) {
    const ResidueDistribution d = fold_mod(closed_form_gf(f, n), m);
    balanced[n] = d.total != 0 && deviation(d).is_zero();
  }
  if (!balanced[n_max]) return std::nullopt;
  unsigned onset = n_max;
  while (onset > 0 && balanced[onset - 1]) --onset;
  return onset;
}

}  // namespace qstat
