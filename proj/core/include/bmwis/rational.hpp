#ifndef BMWIS_RATIONAL_HPP
#define BMWIS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <utility>

namespace bmwis {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational over arbitrary-precision integers.
// Invariant: lowest terms, denominator > 0. No rounding anywhere.
class Ratio {
 public:
  Ratio() : num_(0), den_(1) {}
  Ratio(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  Ratio(BigInt v) : num_(std::move(v)), den_(1) {}
  Ratio(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("Ratio: zero denominator");
    normalize();
  }

  // Accepts "p" or "p/q", optionally signed.
  static Ratio parse(const std::string& text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }
  bool is_integer() const { return den_ == 1; }

  Ratio operator-() const {
    Ratio r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Ratio operator+(const Ratio& a, const Ratio& b) {
    return Ratio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Ratio operator-(const Ratio& a, const Ratio& b) {
    return Ratio(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Ratio operator*(const Ratio& a, const Ratio& b) {
    return Ratio(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Ratio operator/(const Ratio& a, const Ratio& b) {
    if (b.num_ == 0) throw std::invalid_argument("Ratio: division by zero");
    return Ratio(a.num_ * b.den_, a.den_ * b.num_);
  }
  Ratio& operator+=(const Ratio& o) { return *this = *this + o; }
  Ratio& operator-=(const Ratio& o) { return *this = *this - o; }
  Ratio& operator*=(const Ratio& o) { return *this = *this * o; }
  Ratio& operator/=(const Ratio& o) { return *this = *this / o; }

  // Total order by cross multiplication (denominators are positive).
  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Ratio& a, const Ratio& b) { return !(a == b); }
  friend bool operator<(const Ratio& a, const Ratio& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
  friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
  friend bool operator>=(const Ratio& a, const Ratio& b) { return !(a < b); }

  Ratio pow(unsigned exponent) const;

  // Largest integer <= value.
  BigInt floor() const {
    BigInt q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
  }

  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  double to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline Ratio Ratio::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Ratio(BigInt(text));
    return Ratio(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("Ratio: cannot parse '" + text + "'");
  }
}

inline Ratio Ratio::pow(unsigned exponent) const {
  Ratio result(1);
  Ratio base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1u;
  }
  return result;
}

}  // namespace bmwis

#endif
