#include "qstat/residue.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qstat {

namespace {

void check_modulus(int m) {
  if (m < kMinModulus || m > kMaxModulus)
    throw std::invalid_argument("modulus must be in [" + std::to_string(kMinModulus) + ", " +
                                std::to_string(kMaxModulus) + "]");
}

// The m-th roots of unity, indexed by phase s in [0, m).
std::vector<std::complex<double>> root_table(int m) {
  std::vector<std::complex<double>> roots(m);
  for (int s = 0; s < m; ++s) {
    const double angle = 2.0 * std::numbers::pi * s / m;
    roots[s] = {std::cos(angle), std::sin(angle)};
  }
  return roots;
}

std::complex<double> centered_phase_sum(const ResidueDistribution& d, int j,
                                        const std::vector<std::complex<double>>& roots) {
  const int m = d.modulus;
  std::complex<double> sum = 0;
  for (int r = 0; r < m; ++r) {
    BigInt centered = m * d.counts[r] - d.total;  // exact residual times m
    if (centered == 0) continue;
    const double delta = to_double(centered) / m;
    sum += delta * roots[static_cast<int>((static_cast<long long>(j) * r) % m)];
  }
  return sum;
}

}  // namespace

ResidueDistribution fold_mod(const QPolynomial& p, int m) {
  check_modulus(m);
  ResidueDistribution d;
  d.modulus = m;
  d.counts.assign(m, 0);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    d.counts[k % m] += p.coeffs()[k];
  }
  for (const BigInt& c : d.counts) d.total += c;
  return d;
}

std::complex<double> eval_root_of_unity(const ResidueDistribution& d, int j) {
  if (j < 0 || j >= d.modulus) throw std::invalid_argument("root index out of range");
  if (j == 0) return {to_double(d.total), 0.0};
  return centered_phase_sum(d, j, root_table(d.modulus));
}

std::complex<double> filter_sum(const QPolynomial& p, int m, int r) {
  check_modulus(m);
  if (r < 0 || r >= m) throw std::invalid_argument("residue class out of range");
  const ResidueDistribution d = fold_mod(p, m);
  const auto roots = root_table(m);
  std::complex<double> sum = {to_double(d.total), 0.0};
  for (int j = 1; j < m; ++j) {
    // w^{-jr} = conjugate of w^{jr}
    const auto phase = std::conj(roots[static_cast<int>((static_cast<long long>(j) * r) % m)]);
    sum += centered_phase_sum(d, j, roots) * phase;
  }
  return sum;
}

int filter_kernel(long long k, long long r, int m) {
  check_modulus(m);
  const long long diff = ((k - r) % m + m) % m;
  return diff == 0 ? m : 0;
}

ExactRatio deviation(const ResidueDistribution& d) {
  if (d.total == 0) throw std::invalid_argument("deviation of an empty distribution");
  BigInt worst = 0;
  for (const BigInt& c : d.counts) {
    BigInt diff = d.modulus * c - d.total;
    if (diff < 0) diff = -diff;
    if (diff > worst) worst = diff;
  }
  return ExactRatio(worst, d.modulus * d.total);
}

std::vector<double> normalized_filter_magnitudes(const ResidueDistribution& d) {
  if (d.total == 0) throw std::invalid_argument("normalization of an empty distribution");
  const int m = d.modulus;
  // counts[r]/total - 1/m as exact rationals, then rounded once to double
  std::vector<double> deltas(m);
  for (int r = 0; r < m; ++r) {
    deltas[r] = BigRational(m * d.counts[r] - d.total, m * d.total).convert_to<double>();
  }
  const auto roots = root_table(m);
  std::vector<double> magnitudes(m - 1);
  for (int j = 1; j < m; ++j) {
    std::complex<double> sum = 0;
    for (int r = 0; r < m; ++r) {
      if (deltas[r] != 0.0)
        sum += deltas[r] * roots[static_cast<int>((static_cast<long long>(j) * r) % m)];
    }
    magnitudes[j - 1] = std::abs(sum);
  }
  return magnitudes;
}

}  // namespace qstat
