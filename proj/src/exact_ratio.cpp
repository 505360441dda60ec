#include "qstat/exact_ratio.hpp"

#include <stdexcept>
#include <utility>

namespace qstat {

ExactRatio::ExactRatio(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw std::invalid_argument("zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  num_ /= g;
  den_ /= g;
}

double ExactRatio::to_double() const {
  return BigRational(num_, den_).convert_to<double>();
}

std::string ExactRatio::str() const {
  return num_.str() + "/" + den_.str();
}

bool operator<(const ExactRatio& a, const ExactRatio& b) {
  return a.num_ * b.den_ < b.num_ * a.den_;
}

bool operator<=(const ExactRatio& a, const ExactRatio& b) {
  return a.num_ * b.den_ <= b.num_ * a.den_;
}

}  // namespace qstat
