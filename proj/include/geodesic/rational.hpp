#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace geodesic {

// Exact rational scalar. GMP keeps it in lowest terms with a positive
// denominator after every operation.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Accepts "p", "-p" and "p/q" with decimal digits and q > 0.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  BigInt d{std::string(den)};
  if (d == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  BigInt n{std::string(num)};
  if (text.front() == '-') n = -n;
  return Rational(n, d);
}

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

class ArithmeticOverflow : public std::overflow_error {
 public:
  ArithmeticOverflow() : std::overflow_error("int64 rational overflow") {}
};

// Rational over int64 that throws ArithmeticOverflow instead of wrapping.
// Used as a fast path by the feasibility solver; callers retry with
// Rational when it throws.
class CheckedRational {
 public:
  CheckedRational() = default;
  CheckedRational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
  CheckedRational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend CheckedRational operator+(const CheckedRational& a, const CheckedRational& b) {
    if (a.den_ == b.den_) return {add(a.num_, b.num_), a.den_};
    std::int64_t g = std::gcd(a.den_, b.den_);
    std::int64_t bd = b.den_ / g;
    return {add(mul(a.num_, bd), mul(b.num_, a.den_ / g)), mul(a.den_, bd)};
  }
  friend CheckedRational operator-(const CheckedRational& a) {
    if (a.num_ == std::numeric_limits<std::int64_t>::min()) throw ArithmeticOverflow();
    CheckedRational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }
  friend CheckedRational operator-(const CheckedRational& a, const CheckedRational& b) {
    return a + (-b);
  }
  friend CheckedRational operator*(const CheckedRational& a, const CheckedRational& b) {
    if (a.num_ == 0 || b.num_ == 0) return {};
    std::int64_t g1 = std::gcd(a.num_, b.den_);
    std::int64_t g2 = std::gcd(b.num_, a.den_);
    return {mul(a.num_ / g1, b.num_ / g2), mul(a.den_ / g2, b.den_ / g1)};
  }
  friend CheckedRational operator/(const CheckedRational& a, const CheckedRational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    CheckedRational inv;
    inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
    inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
    if (inv.den_ < 0) throw ArithmeticOverflow();
    return a * inv;
  }
  CheckedRational& operator+=(const CheckedRational& o) { return *this = *this + o; }
  CheckedRational& operator-=(const CheckedRational& o) { return *this = *this - o; }
  CheckedRational& operator*=(const CheckedRational& o) { return *this = *this * o; }
  CheckedRational& operator/=(const CheckedRational& o) { return *this = *this / o; }

  friend bool operator==(const CheckedRational& a, const CheckedRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const CheckedRational& a, const CheckedRational& b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l < r;
  }
  friend bool operator>(const CheckedRational& a, const CheckedRational& b) { return b < a; }
  friend bool operator<=(const CheckedRational& a, const CheckedRational& b) { return !(b < a); }
  friend bool operator>=(const CheckedRational& a, const CheckedRational& b) { return !(a < b); }

  int sign() const { return (num_ > 0) - (num_ < 0); }
  Rational to_rational() const { return Rational(num_, den_); }

 private:
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow();
    return r;
  }
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow();
    return r;
  }
  void normalize() {
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (den_ < 0) {
      if (den_ == std::numeric_limits<std::int64_t>::min() ||
          num_ == std::numeric_limits<std::int64_t>::min())
        throw ArithmeticOverflow();
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline int sign_of(const Rational& r) { return r.sign(); }
inline int sign_of(const CheckedRational& r) { return r.sign(); }

}  // namespace geodesic
