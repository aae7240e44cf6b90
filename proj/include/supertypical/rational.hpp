#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace supertypical {

using BigInt = boost::multiprecision::cpp_int;

// Raised when an operation is handed mathematically invalid input: mismatched
// bases, division by zero, a weight outside an operation's domain, a group cap
// overflow. The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for malformed textual input (rationals, family names, CLI values).
// The CLI maps it to exit code 2.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact rational number. Always stored reduced with positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}

  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0)
      v_ = cpp_rational(-num, -den);
    else
      v_ = cpp_rational(num, den);
  }

  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  // Accepts "p/q" or "n" with an optional leading sign, surrounding
  // whitespace ignored.
  static Rational parse(std::string_view text) {
    size_t b = text.find_first_not_of(" \t");
    size_t e = text.find_last_not_of(" \t");
    if (b == std::string_view::npos) throw ParseError("empty rational");
    std::string s(text.substr(b, e - b + 1));

    auto is_int = [](const std::string& t, bool allow_sign) {
      if (t.empty()) return false;
      size_t i = (allow_sign && (t[0] == '+' || t[0] == '-')) ? 1 : 0;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
      return true;
    };
    auto to_big = [](std::string t) {
      if (t[0] == '+') t.erase(0, 1);
      return BigInt(t);
    };

    size_t slash = s.find('/');
    if (slash == std::string::npos) {
      if (!is_int(s, true)) throw ParseError("malformed rational '" + s + "'");
      return Rational(to_big(s), BigInt(1));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_int(num, true) || !is_int(den, false))
      throw ParseError("malformed rational '" + s + "'");
    BigInt d(den);
    if (d == 0) throw ParseError("rational '" + s + "' has zero denominator");
    return Rational(to_big(num), d);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  bool is_nonneg_integer() const { return is_integer() && v_ >= 0; }

  // Requires is_integer(); value must fit in long long.
  long long as_int() const {
    if (!is_integer()) throw DomainError("as_int on non-integer " + str());
    return numerator().convert_to<long long>();
  }

  // "p/q" for non-integers, "n" otherwise.
  std::string str() const {
    std::string s = numerator().str();
    if (!is_integer()) s += "/" + denominator().str();
    return s;
  }

  Rational operator-() const { return Rational(cpp_rational(-v_)); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(cpp_rational(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(cpp_rational(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(cpp_rational(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("rational division by zero");
    return Rational(cpp_rational(a.v_ / b.v_));
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return *this < Rational(0) ? -*this : *this; }

 private:
  using cpp_rational = boost::multiprecision::cpp_rational;
  explicit Rational(cpp_rational v) : v_(std::move(v)) {}
  cpp_rational v_;
};

inline Rational half(long long n) { return Rational(n, 2); }

}  // namespace supertypical
