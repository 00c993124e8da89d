#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace magchain {

/// Exact fraction num/den with den >= 1 and gcd(num, den) = 1.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_integer() const { return den == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, long long k) { return Rational(a.num * k, a.den); }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }

  /// Representative of this value mod m in [0, m).
  Rational mod(long long m) const {
    long long r = num % (m * den);
    if (r < 0) r += m * den;
    return Rational(r, den);
  }

  /// Parses "p/q" or a plain integer string. Returns nothing on failure.
  static std::optional<Rational> parse(const std::string& s) {
    try {
      auto slash = s.find('/');
      if (slash == std::string::npos) {
        size_t pos = 0;
        long long n = std::stoll(s, &pos);
        if (pos != s.size()) return std::nullopt;
        return Rational(n, 1);
      }
      size_t p1 = 0, p2 = 0;
      long long n = std::stoll(s.substr(0, slash), &p1);
      long long d = std::stoll(s.substr(slash + 1), &p2);
      if (p1 != slash || p2 != s.size() - slash - 1) return std::nullopt;
      if (d == 0) return std::nullopt;
      return Rational(n, d);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
};

}  // namespace magchain
