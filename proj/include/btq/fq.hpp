#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace btq {

// Thrown when a caller violates a documented precondition.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an internal invariant fails; indicates a bug, not bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

#define BTQ_CHECK(cond, msg)                                                   \
  do {                                                                         \
    if (!(cond)) throw ::btq::InternalError(std::string("check failed: ") +    \
                                            (msg) + " [" #cond "]");           \
  } while (0)

// The prime field F_q, q an odd prime. Elements are residues in [0, q)
// stored as plain int64_t; this class owns all modular arithmetic.
class FqConfig {
public:
  explicit FqConfig(std::int64_t q) : q_(q) {
    if (q < 3 || q % 2 == 0 || !is_prime(q))
      throw InputError("q must be an odd prime >= 3, got " + std::to_string(q));
  }

  std::int64_t q() const { return q_; }

  std::int64_t reduce(std::int64_t a) const {
    a %= q_;
    return a < 0 ? a + q_ : a;
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % q_; }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return reduce(a - b); }
  std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : q_ - a; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % q_; }

  std::int64_t pow(std::int64_t a, std::int64_t e) const {
    BTQ_CHECK(e >= 0, "negative exponent in FqConfig::pow");
    std::int64_t r = 1;
    a = reduce(a);
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::int64_t inv(std::int64_t a) const {
    a = reduce(a);
    if (a == 0) throw InputError("division by zero in F_q");
    return pow(a, q_ - 2);
  }

  bool is_square(std::int64_t a) const {
    a = reduce(a);
    if (a == 0) return true;
    return pow(a, (q_ - 1) / 2) == 1;
  }

  // Least square root in [0, q); precondition: a is a square.
  std::int64_t sqrt(std::int64_t a) const {
    a = reduce(a);
    for (std::int64_t r = 0; r <= q_ / 2; ++r)
      if (mul(r, r) == a) return r;
    throw InputError("not a square in F_q");
  }

  // Least non-square; exists since q is odd.
  std::int64_t nonsquare() const {
    for (std::int64_t a = 2; a < q_; ++a)
      if (!is_square(a)) return a;
    throw InternalError("no nonsquare found in odd F_q");
  }

  // Least generator of the cyclic group F_q^x.
  std::int64_t primitive_root() const {
    for (std::int64_t g = 2; g < q_; ++g) {
      bool ok = true;
      for (std::int64_t d = 2; d * d <= q_ - 1; ++d) {
        if ((q_ - 1) % d != 0) continue;
        if (pow(g, d) == 1 || pow(g, (q_ - 1) / d) == 1) { ok = false; break; }
      }
      if (ok && pow(g, q_ - 1) == 1) return g;
    }
    return 1;  // q == 3 falls through only when q-1 is prime-power handled above
  }

  bool operator==(const FqConfig& o) const { return q_ == o.q_; }

private:
  static bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  std::int64_t q_;
};

}  // namespace btq
