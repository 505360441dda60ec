#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qstat/bigint.hpp"

namespace qstat {

/// Dense polynomial in q over arbitrary-precision integers.
///
/// coeffs()[k] is the coefficient of q^k. The representation is canonical:
/// the highest stored coefficient is nonzero, and the zero polynomial stores
/// an empty sequence. Values are immutable after construction, so they can be
/// shared freely across threads.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs);

  static QPolynomial constant(BigInt value);
  static QPolynomial monomial(BigInt value, std::size_t exponent);

  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree of a nonzero polynomial; throws std::logic_error on zero.
  std::size_t degree() const;

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  /// Coefficient of q^k, zero beyond the stored range.
  const BigInt& coeff(std::size_t k) const noexcept;

  /// Value at q = 1.
  BigInt sum_of_coeffs() const;

  /// Multiplication by q^k.
  QPolynomial shifted(std::size_t k) const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
QPolynomial operator-(const QPolynomial& a, const QPolynomial& b);
// Schoolbook product; exact, deterministic.
QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);

/// Exact quotient. Throws std::invalid_argument on a zero divisor and
/// std::domain_error if the division leaves a remainder.
QPolynomial exact_divide(const QPolynomial& numerator, const QPolynomial& divisor);

/// p * [t]_q via a sliding-window coefficient sum. Bit-identical to
/// p * q_integer(t) (checked by a differential test), just cheaper.
QPolynomial multiply_by_q_integer(const QPolynomial& p, unsigned t);

/// p / [t]_q in a single pass, with built-in exactness checks. Bit-identical
/// to exact_divide(p, q_integer(t)).
QPolynomial divide_exact_by_q_integer(const QPolynomial& p, unsigned t);

/// [n]_q = 1 + q + ... + q^{n-1}; the zero polynomial for n = 0.
QPolynomial q_integer(unsigned n);

/// [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
QPolynomial q_factorial(unsigned n);

/// Gaussian binomial [n choose k]_q = [n]_q! / ([k]_q! [n-k]_q!).
/// Zero when k < 0 or k > n. The factorial quotient is formed by one exact
/// division whose zero-remainder check doubles as a self-test.
QPolynomial gaussian_binomial(unsigned n, long long k);

/// q-Catalan polynomial C_n(q) = [2n choose n]_q / [n+1]_q, built by the
/// incremental quotient scheme (each step an exact single-pass division).
/// The coefficient sum is checked against the n-th Catalan number.
QPolynomial q_catalan(unsigned n);

/// Major-index generating function over derangements of [n]:
///   d_n(q) = sum_{0<=k<=n} (-1)^k q^{k(k-1)/2} prod_{k+1<=t<=n} [t]_q,
/// evaluated term by term in exact integers. Nonnegativity of the final
/// coefficients is checked, not assumed.
QPolynomial q_derangement(unsigned n);

/// Major-index generating function over all permutations of [n]: [n]_q!.
QPolynomial maj_gf_permutations(unsigned n);

/// Flag-major generating function over signed permutations of [n]:
/// [2]_q [4]_q ... [2n]_q.
QPolynomial fmaj_gf_signed_permutations(unsigned n);

/// Flag-major generating function over signed derangements of [n]:
///   sum_{0<=k<=n} (-1)^k q^{k(k-1)} [2n]_q [2n-2]_q ... [2k+2]_q.
QPolynomial q_derangement_type_b(unsigned n);

/// Exact binomial coefficient, factorial and Catalan number.
BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);
BigInt catalan_number(unsigned n);

/// Ascending-exponent rendering, e.g. "1 + 2*q + q^3"; "0" for zero.
std::string to_display_string(const QPolynomial& p);

}  // namespace qstat
