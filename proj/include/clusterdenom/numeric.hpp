#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace clusterdenom {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised by CheckedRational when an intermediate leaves the int64 range.
struct ArithmeticOverflow {};

/// Reduced fraction over int64 that throws ArithmeticOverflow instead of wrapping.
/// Used as the fast first attempt of exact computations; callers retry with Rational.
class CheckedRational {
 public:
  CheckedRational() = default;
  CheckedRational(std::int64_t v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  CheckedRational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw ArithmeticOverflow{};
    normalize();
  }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  friend CheckedRational operator+(const CheckedRational& a, const CheckedRational& b) {
    if (a.den_ == b.den_) return from_raw(add(a.num_, b.num_), a.den_);
    return from_raw(add(mul(a.num_, b.den_), mul(b.num_, a.den_)), mul(a.den_, b.den_));
  }
  friend CheckedRational operator-(const CheckedRational& a, const CheckedRational& b) {
    return a + (-b);
  }
  friend CheckedRational operator*(const CheckedRational& a, const CheckedRational& b) {
    if (a.num_ == 0 || b.num_ == 0) return {};
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    CheckedRational r;
    r.num_ = mul(a.num_ / g1, b.num_ / g2);
    r.den_ = mul(a.den_ / g2, b.den_ / g1);
    return r;
  }
  friend CheckedRational operator/(const CheckedRational& a, const CheckedRational& b) {
    if (b.num_ == 0) throw ArithmeticOverflow{};
    CheckedRational inv;
    if (b.num_ == INT64_MIN) throw ArithmeticOverflow{};
    inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
    inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
    return a * inv;
  }
  CheckedRational operator-() const {
    if (num_ == INT64_MIN) throw ArithmeticOverflow{};
    CheckedRational r = *this;
    r.num_ = -num_;
    return r;
  }
  CheckedRational& operator+=(const CheckedRational& o) { return *this = *this + o; }
  CheckedRational& operator-=(const CheckedRational& o) { return *this = *this - o; }
  CheckedRational& operator*=(const CheckedRational& o) { return *this = *this * o; }

  friend bool operator==(const CheckedRational&, const CheckedRational&) = default;
  friend std::strong_ordering operator<=>(const CheckedRational& a, const CheckedRational& b) {
    // denominators are positive
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }

  int sign() const { return (num_ > 0) - (num_ < 0); }

 private:
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow{};
    return r;
  }
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow{};
    return r;
  }
  static CheckedRational from_raw(std::int64_t num, std::int64_t den) {
    CheckedRational r;
    r.num_ = num;
    r.den_ = den;
    r.normalize();
    return r;
  }
  void normalize() {
    if (den_ < 0) {
      if (num_ == INT64_MIN || den_ == INT64_MIN) throw ArithmeticOverflow{};
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline int sign_of(const Rational& q) { return q.sign(); }
inline int sign_of(const CheckedRational& q) { return q.sign(); }

inline Rational to_rational(const CheckedRational& q) {
  return Rational(BigInt(q.numerator()), BigInt(q.denominator()));
}

/// Text form "p/q" or "p" used in JSON reports.
inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace clusterdenom
