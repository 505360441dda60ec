#pragma once

#include <string>

#include "qstat/bigint.hpp"

namespace qstat {

/// Exact rational number in reduced form: gcd(num, den) = 1 and den > 0.
/// Used for residue-class deviations so that exact uniformity is testable as
/// literal equality with zero.
class ExactRatio {
 public:
  ExactRatio() : num_(0), den_(1) {}
  ExactRatio(BigInt numerator, BigInt denominator);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }

  double to_double() const;

  /// "num/den", e.g. "1/3" or "0/1".
  std::string str() const;

  friend bool operator==(const ExactRatio&, const ExactRatio&) = default;
  friend bool operator<(const ExactRatio& a, const ExactRatio& b);
  friend bool operator<=(const ExactRatio& a, const ExactRatio& b);
  friend bool operator>(const ExactRatio& a, const ExactRatio& b) { return b < a; }
  friend bool operator>=(const ExactRatio& a, const ExactRatio& b) { return b <= a; }

 private:
  BigInt num_;
  BigInt den_;
};

}  // namespace qstat
