#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "sepdraw/error.hpp"

namespace sepdraw {

/// Exact positive rational used for balance thresholds ("3/4", "0.8").
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Ratio() = default;
  constexpr Ratio(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  /// x <= ratio * total, decided exactly.
  bool admits(std::int64_t x, std::int64_t total) const {
    return static_cast<__int128>(x) * den <= static_cast<__int128>(num) * total;
  }

  /// Largest integer x with x <= ratio * total.
  std::int64_t floor_of(std::int64_t total) const {
    const __int128 p = static_cast<__int128>(num) * total;
    __int128 q = p / den;
    if (p % den != 0 && p < 0) --q;
    return static_cast<std::int64_t>(q);
  }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend constexpr bool operator==(const Ratio& a, const Ratio& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Ratio& a, const Ratio& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
  friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
  friend bool operator>=(const Ratio& a, const Ratio& b) { return !(a < b); }
  friend Ratio operator+(const Ratio& a, const Ratio& b) {
    return Ratio(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Ratio operator-(const Ratio& a, const Ratio& b) {
    return Ratio(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Ratio operator*(const Ratio& a, const Ratio& b) {
    return Ratio(a.num * b.num, a.den * b.den);
  }
  friend Ratio operator/(const Ratio& a, const Ratio& b) {
    return Ratio(a.num * b.den, a.den * b.num);
  }
};

/// Parses "a/b", an integer, or a decimal with at most 9 fractional digits.
inline Ratio parse_ratio(std::string_view text) {
  auto to_int = [&](std::string_view s) -> std::int64_t {
    if (s.empty()) throw InvalidInput("malformed ratio: '" + std::string(text) + "'");
    std::int64_t v = 0;
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-') {
      neg = true;
      i = 1;
    }
    if (i == s.size()) throw InvalidInput("malformed ratio: '" + std::string(text) + "'");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw InvalidInput("malformed ratio: '" + std::string(text) + "'");
      v = v * 10 + (s[i] - '0');
      if (v > (std::int64_t{1} << 40)) throw InvalidInput("ratio component too large: '" + std::string(text) + "'");
    }
    return neg ? -v : v;
  };
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto d = to_int(text.substr(slash + 1));
    if (d == 0) throw InvalidInput("ratio with zero denominator: '" + std::string(text) + "'");
    return Ratio(to_int(text.substr(0, slash)), d);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto frac = text.substr(dot + 1);
    if (frac.size() > 9) throw InvalidInput("too many decimals in ratio: '" + std::string(text) + "'");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const auto whole = dot == 0 ? 0 : to_int(text.substr(0, dot));
    const auto f = frac.empty() ? 0 : to_int(frac);
    return Ratio(whole * den + f, den);
  }
  return Ratio(to_int(text), 1);
}

}  // namespace sepdraw
