#pragma once

#include <complex>
#include <vector>

#include "qstat/exact_ratio.hpp"
#include "qstat/qpoly.hpp"

namespace qstat {

// Supported modulus range. Folding is exact for any m, but the floating
// tolerance analysis for the filter identities assumes small m.
inline constexpr int kMinModulus = 2;
inline constexpr int kMaxModulus = 64;

/// Relative tolerance used by the floating-point filter identities.
inline constexpr double kFilterTolerance = 1e-9;

/// Coefficient mass of a polynomial folded by exponent residue class:
/// counts[r] = sum of coeff(k) over k == r (mod m). Equivalent to reducing
/// the polynomial modulo q^m - 1. The integer path is authoritative; complex
/// evaluations below are diagnostic.
struct ResidueDistribution {
  int modulus = 0;
  std::vector<BigInt> counts;
  BigInt total;
};

/// Folds p modulo q^m - 1. Throws std::invalid_argument for m outside
/// [kMinModulus, kMaxModulus].
ResidueDistribution fold_mod(const QPolynomial& p, int m);

/// sum_r counts[r] * exp(2*pi*i*j*r/m) for 0 <= j <= m-1.
///
/// For 1 <= j the phases sum to zero, so the counts are first centered by the
/// exact mean: sum_r (counts[r] - total/m) * w^{jr} has the same value but
/// stays accurate when the counts are huge and nearly uniform, which is the
/// regime every generating function here lands in as n grows.
std::complex<double> eval_root_of_unity(const ResidueDistribution& d, int j);

/// Filter sum T = sum_{0<=j<=m-1} p(w^j) * w^{-jr}. The real part recovers
/// m * counts[r] within kFilterTolerance; the imaginary part vanishes.
std::complex<double> filter_sum(const QPolynomial& p, int m, int r);

/// sum_{0<=j<=m-1} w^{(k-r)j}, evaluated exactly via the divisibility test:
/// m when m | (k - r), else 0.
int filter_kernel(long long k, long long r, int m);

/// max_r |counts[r]/total - 1/m| as an exact reduced rational.
/// Throws std::invalid_argument when total is zero.
ExactRatio deviation(const ResidueDistribution& d);

/// |p(w^j)| / p(1) for j = 1..m-1, each computed from exactly centered
/// residue ratios so the result is meaningful at any magnitude of total.
std::vector<double> normalized_filter_magnitudes(const ResidueDistribution& d);

}  // namespace qstat
