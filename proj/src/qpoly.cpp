#include "qstat/qpoly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace qstat {

namespace {

const BigInt kZero = 0;

void trim(std::vector<BigInt>& coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

}  // namespace

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

QPolynomial QPolynomial::constant(BigInt value) {
  std::vector<BigInt> c;
  if (value != 0) c.push_back(std::move(value));
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::monomial(BigInt value, std::size_t exponent) {
  if (value == 0) return {};
  std::vector<BigInt> c(exponent + 1);
  c[exponent] = std::move(value);
  return QPolynomial(std::move(c));
}

std::size_t QPolynomial::degree() const {
  if (coeffs_.empty()) throw std::logic_error("degree of the zero polynomial");
  return coeffs_.size() - 1;
}

const BigInt& QPolynomial::coeff(std::size_t k) const noexcept {
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

BigInt QPolynomial::sum_of_coeffs() const {
  BigInt s = 0;
  for (const BigInt& c : coeffs_) s += c;
  return s;
}

QPolynomial QPolynomial::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return k == 0 ? *this : QPolynomial{};
  std::vector<BigInt> c(coeffs_.size() + k);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + k] = coeffs_[i];
  return QPolynomial(std::move(c));
}

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return QPolynomial(std::move(c));
}

QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return QPolynomial(std::move(c));
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const BigInt& ai = a.coeffs()[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      if (b.coeffs()[j] != 0) c[i + j] += ai * b.coeffs()[j];
    }
  }
  return QPolynomial(std::move(c));
}

QPolynomial exact_divide(const QPolynomial& numerator, const QPolynomial& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (numerator.is_zero()) return {};
  const std::vector<BigInt>& d = divisor.coeffs();
  if (numerator.coeffs().size() < d.size())
    throw std::domain_error("polynomial division leaves a remainder");

  std::vector<BigInt> rem = numerator.coeffs();
  std::vector<BigInt> quot(rem.size() - d.size() + 1);
  const BigInt& lead = d.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt qc, r;
    boost::multiprecision::divide_qr(rem[k + d.size() - 1], lead, qc, r);
    if (r != 0) throw std::domain_error("polynomial division leaves a remainder");
    quot[k] = qc;
    if (qc == 0) continue;
    for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= qc * d[i];
  }
  for (const BigInt& c : rem) {
    if (c != 0) throw std::domain_error("polynomial division leaves a remainder");
  }
  return QPolynomial(std::move(quot));
}

QPolynomial multiply_by_q_integer(const QPolynomial& p, unsigned t) {
  if (t == 0 || p.is_zero()) return {};
  std::vector<BigInt> c(p.coeffs().size() + t - 1);
  BigInt window = 0;  // running sum of p's coefficients inside [k-t+1, k]
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k < p.coeffs().size()) window += p.coeffs()[k];
    if (k >= t) window -= p.coeffs()[k - t];
    c[k] = window;
  }
  return QPolynomial(std::move(c));
}

QPolynomial q_integer(unsigned n) {
  return QPolynomial(std::vector<BigInt>(n, 1));
}

QPolynomial divide_exact_by_q_integer(const QPolynomial& p, unsigned t) {
  if (t == 0) throw std::invalid_argument("polynomial division by zero");
  if (t == 1 || p.is_zero()) return p;
  // p / [t]_q through p * (q - 1) = s * (q^t - 1): one pass for the quotient,
  // then the low-order coefficients confirm the division was exact.
  const std::vector<BigInt>& c = p.coeffs();
  std::vector<BigInt> r(c.size() + 1);
  for (std::size_t k = 0; k <= c.size(); ++k) {
    r[k] = (k > 0 ? c[k - 1] : BigInt(0)) - (k < c.size() ? c[k] : BigInt(0));
  }
  if (r.size() <= t) throw std::domain_error("polynomial division leaves a remainder");
  std::vector<BigInt> s(r.size() - t);
  for (std::size_t j = r.size(); j-- > t;) {
    s[j - t] = r[j] + (j < s.size() ? s[j] : BigInt(0));
  }
  for (std::size_t j = 0; j < t; ++j) {
    const BigInt expected = j < s.size() ? BigInt(-s[j]) : BigInt(0);
    if (r[j] != expected) throw std::domain_error("polynomial division leaves a remainder");
  }
  return QPolynomial(std::move(s));
}

QPolynomial q_factorial(unsigned n) {
  QPolynomial p = QPolynomial::constant(1);
  for (unsigned t = 2; t <= n; ++t) p = multiply_by_q_integer(p, t);
  return p;
}

QPolynomial gaussian_binomial(unsigned n, long long k) {
  if (k < 0 || k > static_cast<long long>(n)) return {};
  const unsigned ku = static_cast<unsigned>(k);
  return exact_divide(q_factorial(n), q_factorial(ku) * q_factorial(n - ku));
}

QPolynomial q_catalan(unsigned n) {
  // [2n choose n]_q / [n+1]_q, built incrementally: peel the denominator
  // factorials off [2n]_q! one [t]_q at a time. Every intermediate quotient
  // is a polynomial and every step re-checks exactness.
  QPolynomial c = q_factorial(2 * n);
  for (unsigned t = 2; t <= n; ++t) c = divide_exact_by_q_integer(c, t);
  for (unsigned t = 2; t <= n + 1; ++t) c = divide_exact_by_q_integer(c, t);
  if (c.sum_of_coeffs() != catalan_number(n))
    throw std::logic_error("q-Catalan coefficient sum is not the Catalan number");
  return c;
}

namespace {

std::size_t choose2(unsigned x) {
  return x < 2 ? 0 : static_cast<std::size_t>(x) * (x - 1) / 2;
}

}  // namespace

QPolynomial q_derangement(unsigned n) {
  // Suffix products: at step k the accumulator holds prod_{k+1<=t<=n} [t]_q.
  std::vector<BigInt> acc(choose2(n) + 1);
  QPolynomial suffix = QPolynomial::constant(1);
  for (unsigned k = n;; --k) {
    const std::size_t shift = choose2(k);
    const int sign = (k % 2 == 0) ? 1 : -1;
    for (std::size_t i = 0; i < suffix.coeffs().size(); ++i) {
      if (sign > 0)
        acc[shift + i] += suffix.coeffs()[i];
      else
        acc[shift + i] -= suffix.coeffs()[i];
    }
    if (k == 0) break;
    suffix = multiply_by_q_integer(suffix, k);
  }
  QPolynomial d{std::move(acc)};
  for (const BigInt& c : d.coeffs()) {
    if (c < 0) throw std::logic_error("negative coefficient in derangement generating function");
  }
  return d;
}

QPolynomial maj_gf_permutations(unsigned n) { return q_factorial(n); }

QPolynomial fmaj_gf_signed_permutations(unsigned n) {
  QPolynomial p = QPolynomial::constant(1);
  for (unsigned k = 1; k <= n; ++k) p = multiply_by_q_integer(p, 2 * k);
  return p;
}

QPolynomial q_derangement_type_b(unsigned n) {
  // Suffix products of [2t]_q; the k-th term is (-1)^k q^{k(k-1)} times
  // prod_{k+1<=t<=n} [2t]_q.
  std::vector<BigInt> acc(static_cast<std::size_t>(n) * n + 1);
  QPolynomial suffix = QPolynomial::constant(1);
  for (unsigned k = n;; --k) {
    const std::size_t shift = 2 * choose2(k);
    const int sign = (k % 2 == 0) ? 1 : -1;
    for (std::size_t i = 0; i < suffix.coeffs().size(); ++i) {
      if (sign > 0)
        acc[shift + i] += suffix.coeffs()[i];
      else
        acc[shift + i] -= suffix.coeffs()[i];
    }
    if (k == 0) break;
    suffix = multiply_by_q_integer(suffix, 2 * k);
  }
  QPolynomial d{std::move(acc)};
  for (const BigInt& c : d.coeffs()) {
    if (c < 0)
      throw std::logic_error("negative coefficient in signed-derangement generating function");
  }
  return d;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step
  }
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt catalan_number(unsigned n) {
  BigInt b = binomial(2 * n, n);
  BigInt q, r;
  boost::multiprecision::divide_qr(b, BigInt(n + 1), q, r);
  if (r != 0) throw std::logic_error("central binomial not divisible by n+1");
  return q;
}

std::string to_display_string(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    BigInt c = p.coeffs()[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (c < 0) c = -c;
    if (k == 0) {
      out << c;
    } else {
      if (c != 1) out << c << "*";
      out << "q";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

}  // namespace qstat
