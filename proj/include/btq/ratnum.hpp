#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "btq/fq.hpp"

namespace btq {

// Exact rational number on 64-bit words with overflow-checked ops; plenty
// for the desk-scale counting formulas (no floating point anywhere).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    BTQ_CHECK(den != 0, "rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  static std::int64_t checked(__int128 v) {
    BTQ_CHECK(v <= INT64_MAX && v >= INT64_MIN, "rational overflow");
    return static_cast<std::int64_t>(v);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked(static_cast<__int128>(a.num) * b.den +
                            static_cast<__int128>(b.num) * a.den),
                    checked(static_cast<__int128>(a.den) * b.den));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational(-b.num, b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked(static_cast<__int128>(a.num) * b.num),
                    checked(static_cast<__int128>(a.den) * b.den));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    BTQ_CHECK(b.num != 0, "rational division by zero");
    return Rational(checked(static_cast<__int128>(a.num) * b.den),
                    checked(static_cast<__int128>(a.den) * b.num));
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }

  bool is_integer() const { return den == 1; }
  std::int64_t as_integer() const {
    BTQ_CHECK(den == 1, "rational is not an integer");
    return num;
  }
  std::string to_string() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace btq
