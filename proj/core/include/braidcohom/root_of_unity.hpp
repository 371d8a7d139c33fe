#pragma once

#include <numeric>
#include <string>

#include "braidcohom/errors.hpp"

namespace braidcohom {

/// e^{2πi r} for a rational r kept reduced in [0, 1).
class RootOfUnity {
public:
  RootOfUnity() = default;
  RootOfUnity(long long num, long long den) {
    if (den <= 0)
      throw DomainError("RootOfUnity: denominator must be positive");
    num %= den;
    if (num < 0)
      num += den;
    auto g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  static RootOfUnity one() { return {}; }
  static RootOfUnity minus_one() { return {1, 2}; }
  static RootOfUnity sign(int s) { return s < 0 ? minus_one() : one(); }

  long long numerator() const noexcept { return num_; }
  long long denominator() const noexcept { return den_; }
  bool is_one() const noexcept { return num_ == 0; }

  RootOfUnity inverse() const { return {den_ - num_, den_}; }

  friend RootOfUnity operator*(RootOfUnity const &a, RootOfUnity const &b) {
    auto l = std::lcm(a.den_, b.den_);
    return {a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l};
  }
  RootOfUnity &operator*=(RootOfUnity const &o) { return *this = *this * o; }

  friend bool operator==(RootOfUnity const &, RootOfUnity const &) = default;

  std::string to_string() const {
    return num_ == 0 ? "1" : "e^(2πi·" + std::to_string(num_) + "/" + std::to_string(den_) + ")";
  }

private:
  long long num_ = 0;
  long long den_ = 1;
};

} // namespace braidcohom
