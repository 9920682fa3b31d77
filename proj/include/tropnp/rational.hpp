#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tropnp {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Exact rational scalar.
 *
 * Always held in canonical form: denominator > 0, gcd(|num|, den) == 1,
 * zero is 0/1. Comparisons are exact and agree with the real-number order.
 */
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int v) : num_(v), den_(1) {}                  // NOLINT: implicit by design
  Rational(long long v) : num_(v), den_(1) {}            // NOLINT
  explicit Rational(BigInt v) : num_(std::move(v)), den_(1) {}

  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    canonicalize();
  }
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  /// True iff the stored pair is in canonical form (test hook).
  bool is_canonical() const {
    if (den_ <= 0) return false;
    if (num_ == 0) return den_ == 1;
    return gcd(abs(num_), den_) == 1;
  }

  friend Rational operator-(const Rational& a) {
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Denominators are positive, so cross-multiplication preserves order.
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Renders "-3", "7/2", "0". parse(str()) round-trips exactly.
  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) {
      s += '/';
      s += den_.str();
    }
    return s;
  }

  /**
   * Parses an integer ("-3"), a fraction ("7/2") or a finite decimal
   * ("0.25", converted exactly). Throws std::invalid_argument naming the
   * offending token on malformed text or a zero denominator.
   */
  static Rational parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  void canonicalize() {
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = gcd(abs(num_), den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;  // > 0
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// cpp_int's string constructor reads a leading '0' as an octal prefix, so
// decimal digit runs are converted with leading zeros stripped.
inline BigInt digits_to_int(std::string_view s) {
  std::size_t first = 0;
  while (first + 1 < s.size() && s[first] == '0') ++first;
  return BigInt(std::string(s.substr(first)));
}

[[noreturn]] inline void parse_fail(std::string_view text) {
  throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }

  auto slash = rest.find('/');
  auto dot = rest.find('.');
  BigInt num, den;
  if (slash != std::string_view::npos) {
    std::string_view n = rest.substr(0, slash);
    std::string_view d = rest.substr(slash + 1);
    if (!detail::all_digits(n) || !detail::all_digits(d)) detail::parse_fail(text);
    num = detail::digits_to_int(n);
    den = detail::digits_to_int(d);
    if (den == 0)
      throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  } else if (dot != std::string_view::npos) {
    std::string_view ip = rest.substr(0, dot);
    std::string_view fp = rest.substr(dot + 1);
    if (!detail::all_digits(ip) || !detail::all_digits(fp)) detail::parse_fail(text);
    num = detail::digits_to_int(std::string(ip) + std::string(fp));
    den = 1;
    for (size_t i = 0; i < fp.size(); ++i) den *= 10;
  } else {
    if (!detail::all_digits(rest)) detail::parse_fail(text);
    num = detail::digits_to_int(rest);
    den = 1;
  }
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

}  // namespace tropnp
