#ifndef LIFTLOG_RATIONAL_HPP
#define LIFTLOG_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace liftlog {

/// Exact rational on 64-bit numerator/denominator.  All intermediate
/// products go through 128-bit arithmetic and overflow raises instead of
/// wrapping; the toolkit works at desk scale where this never triggers.
class rat {
public:
  rat() : num_(0), den_(1) {}
  rat(long long n) : num_(n), den_(1) {}
  rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

  friend rat operator+(const rat& a, const rat& b) {
    return from128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                   (__int128)a.den_ * b.den_);
  }
  friend rat operator-(const rat& a, const rat& b) {
    return from128((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
                   (__int128)a.den_ * b.den_);
  }
  friend rat operator*(const rat& a, const rat& b) {
    return from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend rat operator/(const rat& a, const rat& b) {
    if (b.num_ == 0) throw std::domain_error("rat: division by zero");
    return from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }
  rat operator-() const { rat r; r.num_ = -num_; r.den_ = den_; return r; }
  rat& operator+=(const rat& b) { *this = *this + b; return *this; }
  rat& operator-=(const rat& b) { *this = *this - b; return *this; }
  rat& operator*=(const rat& b) { *this = *this * b; return *this; }
  rat& operator/=(const rat& b) { *this = *this / b; return *this; }

  friend bool operator==(const rat& a, const rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const rat& a, const rat& b) { return !(a == b); }
  friend bool operator<(const rat& a, const rat& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator>(const rat& a, const rat& b) { return b < a; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  static rat from128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rat: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("rat: 64-bit overflow");
    rat r;
    r.num_ = (long long)n;
    r.den_ = (long long)d;
    return r;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
  }
  void normalize() {
    *this = from128(num_, den_);
  }

  long long num_;
  long long den_;
};

} // namespace liftlog

#endif
