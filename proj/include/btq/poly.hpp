#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "btq/fq.hpp"

namespace btq {

// Dense polynomial over F_q in the variable T. Canonical form: no trailing
// zero coefficients; the zero polynomial has an empty coefficient vector and
// its degree is a sentinel (std::nullopt), never an integer.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) {
    strip();
  }

  static Poly zero() { return Poly(); }
  static Poly constant(std::int64_t v) { return Poly({v}); }
  // c * T^n
  static Poly monomial(std::int64_t c, int n) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(n) + 1, 0);
    v[static_cast<std::size_t>(n)] = c;
    return Poly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }
  // Degree of a nonzero polynomial.
  int deg_nonzero() const {
    BTQ_CHECK(!c_.empty(), "deg of zero polynomial");
    return static_cast<int>(c_.size()) - 1;
  }

  std::int64_t coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return 0;
    return c_[static_cast<std::size_t>(i)];
  }
  std::int64_t lead() const {
    BTQ_CHECK(!c_.empty(), "lead of zero polynomial");
    return c_.back();
  }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }
  // Index order: base-q digit comparison, i.e. degree first, then
  // coefficients from the top down. Used everywhere a deterministic scan
  // order is needed.
  bool operator<(const Poly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (std::size_t i = c_.size(); i-- > 0;)
      if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
  }

private:
  void strip() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<std::int64_t> c_;
};

struct PolyHash {
  std::size_t operator()(const Poly& p) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p.coeffs()) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Arithmetic suite for F_q[T]. All results are in canonical form.
struct PolyRing {
  FqConfig fq;

  explicit PolyRing(FqConfig cfg) : fq(cfg) {}
  explicit PolyRing(std::int64_t q) : fq(q) {}

  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly neg(const Poly& a) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly mul_scalar(const Poly& a, std::int64_t s) const;
  // Quotient and remainder; b must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const;
  Poly mod(const Poly& a, const Poly& b) const { return divmod(a, b).second; }
  // Monic gcd; gcd(0,0) = 0.
  Poly gcd(const Poly& a, const Poly& b) const;
  // g, u, v with g = ua + vb, g monic (or zero).
  std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b) const;
  Poly powmod(const Poly& a, std::int64_t e, const Poly& m) const;
  std::int64_t eval(const Poly& a, std::int64_t x) const;
  Poly derivative(const Poly& a) const;
  Poly monic(const Poly& a) const;
  // Inverse of a mod m; requires gcd(a,m) = 1.
  Poly invmod(const Poly& a, const Poly& m) const;

  // Bijection N <-> F_q[T] by base-q digits; the enumeration order for all
  // deterministic searches.
  Poly from_index(std::uint64_t n) const;
  std::uint64_t to_index(const Poly& a) const;

  // Text form "c*T^k + ... + c0"; parser accepts what the printer emits,
  // implicit 1-coefficients and any whitespace. "T2" (missing '^') is
  // rejected.
  std::string to_string(const Poly& a) const;
  Poly parse(const std::string& s) const;
};

}  // namespace btq
