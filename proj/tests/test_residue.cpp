#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "qstat/residue.hpp"

using namespace qstat;

namespace {

QPolynomial poly(std::initializer_list<long long> coeffs) {
  std::vector<BigInt> c;
  for (long long v : coeffs) c.emplace_back(v);
  return QPolynomial(std::move(c));
}

QPolynomial random_nonneg_poly(std::mt19937& rng, std::size_t max_degree, long long max_coeff) {
  std::uniform_int_distribution<std::size_t> degree_dist(0, max_degree);
  std::uniform_int_distribution<long long> coeff_dist(0, max_coeff);
  std::vector<BigInt> c(degree_dist(rng) + 1);
  for (BigInt& v : c) v = coeff_dist(rng);
  if (c[0] == 0) c[0] = 1;
  return QPolynomial(std::move(c));
}

// Independent fold: reduce modulo q^m - 1 by repeatedly subtracting
// c_d * q^{d-m} (q^m - 1) from the top term.
std::vector<BigInt> fold_by_repeated_subtraction(const QPolynomial& p, int m) {
  std::vector<BigInt> c = p.coeffs();
  while (c.size() > static_cast<std::size_t>(m)) {
    const std::size_t d = c.size() - 1;
    c[d - m] += c[d];
    c.pop_back();
  }
  c.resize(m, 0);
  return c;
}

// Direct complex Horner evaluation, independent of the folding path.
std::complex<double> eval_poly_at(const QPolynomial& p, std::complex<double> z) {
  std::complex<double> value = 0;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    value = value * z + to_double(p.coeffs()[k]);
  }
  return value;
}

std::complex<double> unit_root(int m, long long power) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(((power % m) + m) % m) / m;
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

TEST_SUITE("residue") {

TEST_CASE("fold_mod folds exponents by residue class") {
  const ResidueDistribution d = fold_mod(poly({1, 1, 2, 1}), 2);
  CHECK(d.counts == std::vector<BigInt>{3, 2});
  CHECK(d.total == 5);

  const ResidueDistribution f3 = fold_mod(q_factorial(3), 3);
  CHECK(f3.counts == std::vector<BigInt>{2, 2, 2});

  const ResidueDistribution zero = fold_mod(QPolynomial{}, 5);
  CHECK(zero.counts == std::vector<BigInt>(5, 0));
  CHECK(zero.total == 0);
}

TEST_CASE("fold_mod rejects out-of-range moduli") {
  CHECK_THROWS_AS(fold_mod(poly({1}), 1), std::invalid_argument);
  CHECK_THROWS_AS(fold_mod(poly({1}), 0), std::invalid_argument);
  CHECK_THROWS_AS(fold_mod(poly({1}), -3), std::invalid_argument);
  CHECK_THROWS_AS(fold_mod(poly({1}), 65), std::invalid_argument);
  CHECK_NOTHROW(fold_mod(poly({1}), 64));
}

TEST_CASE("fold_mod agrees with reduction modulo q^m - 1") {
  std::mt19937 rng(555111);
  for (int trial = 0; trial < 60; ++trial) {
    const QPolynomial p = random_nonneg_poly(rng, 200, 1000000);
    std::uniform_int_distribution<int> m_dist(2, 16);
    const int m = m_dist(rng);
    CHECK(fold_mod(p, m).counts == fold_by_repeated_subtraction(p, m));
  }
}

TEST_CASE("eval_root_of_unity matches direct polynomial evaluation") {
  std::mt19937 rng(777333);
  for (int trial = 0; trial < 40; ++trial) {
    const QPolynomial p = random_nonneg_poly(rng, 60, 500);
    std::uniform_int_distribution<int> m_dist(2, 12);
    const int m = m_dist(rng);
    const ResidueDistribution d = fold_mod(p, m);
    for (int j = 0; j < m; ++j) {
      const std::complex<double> got = eval_root_of_unity(d, j);
      const std::complex<double> expected = eval_poly_at(p, unit_root(m, j));
      CHECK(std::abs(got - expected) <= 1e-9 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("eval_root_of_unity known values") {
  // [3]_q! vanishes at the primitive cube roots of unity
  const ResidueDistribution f3 = fold_mod(q_factorial(3), 3);
  CHECK(std::abs(eval_root_of_unity(f3, 1)) < 1e-12);
  CHECK(std::abs(eval_root_of_unity(f3, 2)) < 1e-12);
  CHECK(eval_root_of_unity(f3, 0).real() == doctest::Approx(6.0));
  CHECK(eval_root_of_unity(f3, 0).imag() == 0.0);

  // d_2(q) = q gives counts (0, 1) mod 2 and value -1 at q = -1
  const ResidueDistribution d2 = fold_mod(q_derangement(2), 2);
  CHECK(eval_root_of_unity(d2, 1).real() == doctest::Approx(-1.0));
  CHECK(std::abs(eval_root_of_unity(d2, 1).imag()) < 1e-12);

  CHECK_THROWS_AS(eval_root_of_unity(d2, 2), std::invalid_argument);
  CHECK_THROWS_AS(eval_root_of_unity(d2, -1), std::invalid_argument);
}

TEST_CASE("eval_root_of_unity at j = 0 is the value at q = 1") {
  std::mt19937 rng(999);
  for (int trial = 0; trial < 20; ++trial) {
    const QPolynomial p = random_nonneg_poly(rng, 80, 2000);
    const ResidueDistribution d = fold_mod(p, 7);
    CHECK(d.total == p.sum_of_coeffs());
    CHECK(eval_root_of_unity(d, 0).real() == to_double(p.sum_of_coeffs()));
  }
}

TEST_CASE("filter_sum recovers m times the class count") {
  const std::complex<double> t = filter_sum(q_factorial(3), 3, 0);
  CHECK(t.real() == doctest::Approx(6.0));
  CHECK(std::abs(t.imag()) < 1e-12);

  // constant polynomial: all mass in class 0
  for (int r = 0; r < 4; ++r) {
    const std::complex<double> u = filter_sum(poly({1}), 4, r);
    CHECK(u.real() == doctest::Approx(r == 0 ? 4.0 : 0.0));
    CHECK(std::abs(u.imag()) < 1e-12);
  }

  // d_3 = q + q^2 has one odd-class member
  const std::complex<double> v = filter_sum(q_derangement(3), 2, 1);
  CHECK(v.real() == doctest::Approx(2.0));

  CHECK_THROWS_AS(filter_sum(poly({1}), 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(filter_sum(poly({1}), 4, -1), std::invalid_argument);
  CHECK_THROWS_AS(filter_sum(poly({1}), 1, 0), std::invalid_argument);
}

TEST_CASE("filter_sum identity on random polynomials") {
  std::mt19937 rng(24681357);
  for (int trial = 0; trial < 50; ++trial) {
    const QPolynomial p = random_nonneg_poly(rng, 150, 10000);
    std::uniform_int_distribution<int> m_dist(2, 12);
    const int m = m_dist(rng);
    std::uniform_int_distribution<int> r_dist(0, m - 1);
    const int r = r_dist(rng);
    const ResidueDistribution d = fold_mod(p, m);
    const std::complex<double> t = filter_sum(p, m, r);
    const double expected = to_double(m * d.counts[r]);
    CHECK(std::abs(t.real() - expected) <= 1e-9 * std::max(1.0, std::abs(expected)));
    CHECK(std::abs(t.imag()) <= 1e-9 * std::max(1.0, to_double(d.total)));
  }
}

TEST_CASE("filter_kernel divisibility cases") {
  CHECK(filter_kernel(7, 1, 3) == 3);
  CHECK(filter_kernel(5, 1, 3) == 0);
  for (int m = 2; m <= 12; ++m) {
    for (long long r = 0; r < m; ++r) CHECK(filter_kernel(r, r, m) == m);
  }
  CHECK(filter_kernel(-5, 1, 3) == 3);  // -5 - 1 = -6 is divisible by 3
  CHECK(filter_kernel(-5, 0, 3) == 0);
}

TEST_CASE("filter_kernel agrees with the complex phase sum") {
  for (int m = 2; m <= 12; ++m) {
    for (long long diff = -100; diff <= 100; ++diff) {
      std::complex<double> sum = 0;
      for (int j = 0; j < m; ++j) sum += unit_root(m, diff * j);
      CHECK(filter_kernel(diff, 0, m) == std::llround(sum.real()));
      CHECK(std::abs(sum.imag()) < 1e-9 * m);
    }
  }
}

TEST_CASE("deviation exact values") {
  CHECK(deviation(fold_mod(q_factorial(4), 4)) == ExactRatio());
  CHECK(deviation(fold_mod(q_derangement(3), 2)) == ExactRatio());
  CHECK(deviation(fold_mod(poly({1, 1}), 3)) == ExactRatio(1, 3));
  CHECK_THROWS_AS(deviation(fold_mod(QPolynomial{}, 3)), std::invalid_argument);
  CHECK_THROWS_AS(deviation(fold_mod(q_derangement(1), 2)), std::invalid_argument);
}

TEST_CASE("ExactRatio normalization and ordering") {
  const ExactRatio half(2, 4);
  CHECK(half.numerator() == 1);
  CHECK(half.denominator() == 2);
  CHECK(half.str() == "1/2");
  CHECK(ExactRatio(3, -6).str() == "-1/2");
  CHECK(ExactRatio(0, 7).str() == "0/1");
  CHECK(ExactRatio(1, 3) < ExactRatio(1, 2));
  CHECK(ExactRatio(1, 3) <= ExactRatio(2, 6));
  CHECK(ExactRatio(2, 3) > ExactRatio(1, 2));
  CHECK(ExactRatio(1, 2).to_double() == 0.5);
  CHECK_THROWS_AS(ExactRatio(1, 0), std::invalid_argument);
}

TEST_CASE("fold of a product is the cyclic convolution of the folds") {
  std::mt19937 rng(112233);
  for (int trial = 0; trial < 40; ++trial) {
    const QPolynomial a = random_nonneg_poly(rng, 40, 300);
    const QPolynomial b = random_nonneg_poly(rng, 40, 300);
    std::uniform_int_distribution<int> m_dist(2, 10);
    const int m = m_dist(rng);
    const auto fa = fold_mod(a, m).counts;
    const auto fb = fold_mod(b, m).counts;
    std::vector<BigInt> conv(m, 0);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) conv[(i + j) % m] += fa[i] * fb[j];
    }
    CHECK(fold_mod(a * b, m).counts == conv);
  }
}

TEST_CASE("a factor [t]_q with m | t kills every nontrivial root evaluation") {
  std::mt19937 rng(445566);
  for (int m = 2; m <= 9; ++m) {
    for (int mult = 1; mult <= 2; ++mult) {
      const QPolynomial p =
          multiply_by_q_integer(random_nonneg_poly(rng, 30, 100), static_cast<unsigned>(m * mult));
      const ResidueDistribution d = fold_mod(p, m);
      for (int j = 1; j < m; ++j) {
        CHECK(std::abs(eval_root_of_unity(d, j)) <= 1e-9 * to_double(d.total));
      }
      // centering makes the vanishing exact: the fold is uniform
      CHECK(deviation(d) == ExactRatio());
    }
  }
}

TEST_CASE("centered evaluation matches exact quadratic-ring magnitudes at huge scale") {
  // For m in {2, 3, 4, 6} the m-th roots of unity live in quadratic integer
  // rings, so |f(w)|^2 is an exact integer expression in the fold counts.
  // This pins the centered floating path in the regime where the counts are
  // astronomically large and the value is O(1).
  auto exact_square = [](const ResidueDistribution& d) -> BigInt {
    const auto& c = d.counts;
    switch (d.modulus) {
      case 2:
        return (c[0] - c[1]) * (c[0] - c[1]);
      case 3: {
        const BigInt x = c[0] - c[2], y = c[1] - c[2];  // f(w) = x + y*w, w^2 = -1 - w
        return x * x - x * y + y * y;
      }
      case 4: {
        const BigInt x = c[0] - c[2], y = c[1] - c[3];  // f(i) = x + y*i
        return x * x + y * y;
      }
      default: {  // m = 6, w = exp(i*pi/3): w^3 = -1, w^2 = w - 1
        const BigInt a = (c[0] - c[3]) - (c[2] - c[5]);
        const BigInt b = (c[1] - c[4]) + (c[2] - c[5]);
        return a * a + a * b + b * b;
      }
    }
  };
  for (unsigned n : {25u, 60u, 100u}) {
    const QPolynomial d_n = q_derangement(n);
    for (int m : {2, 3, 4, 6}) {
      const ResidueDistribution d = fold_mod(d_n, m);
      const double got = std::norm(eval_root_of_unity(d, 1));
      const double expected = to_double(exact_square(d));
      CHECK(std::abs(got - expected) <= 1e-9 * std::max(1.0, expected));
    }
  }
}

TEST_CASE("normalized magnitudes are |p(w^j)| / p(1)") {
  std::mt19937 rng(8080);
  for (int trial = 0; trial < 25; ++trial) {
    const QPolynomial p = random_nonneg_poly(rng, 50, 400);
    std::uniform_int_distribution<int> m_dist(2, 9);
    const int m = m_dist(rng);
    const ResidueDistribution d = fold_mod(p, m);
    const std::vector<double> mags = normalized_filter_magnitudes(d);
    REQUIRE(mags.size() == static_cast<std::size_t>(m - 1));
    const double total = to_double(d.total);
    for (int j = 1; j < m; ++j) {
      const double expected = std::abs(eval_poly_at(p, unit_root(m, j))) / total;
      CHECK(std::abs(mags[j - 1] - expected) <= 1e-9 * std::max(1.0, expected));
    }
  }
}

}  // TEST_SUITE
