#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "btq/poly.hpp"

namespace btq {

// Raised when a truncated computation cannot certify a leading coefficient
// (typically after catastrophic cancellation). Callers either fail or retry
// at doubled precision.
struct InsufficientPrecision : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OddValuation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonSquareLeadingCoeff : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Retry policy for computations that can lose precision to cancellation.
struct PrecisionPolicy {
  int initial = 64;      // starting absolute coefficient count
  int max_doublings = 4;

  static PrecisionPolicy for_degree(int deg_ab) {
    PrecisionPolicy p;
    p.initial = 4 * deg_ab + 64;
    return p;
  }
};

// Truncated Laurent series in pi = 1/T over F_q: the element is known
// modulo pi^prec. Nonzero-to-precision elements store every known
// coefficient, c[i] = coeff of pi^{val+i}, with c[0] != 0 and
// val + size == prec. Zero-to-precision is the distinct observable state
// c empty; callers must branch on it explicitly.
class Series {
public:
  static Series zero_to_prec(int prec) { return Series(prec, 0, {}); }
  static Series make(const FqConfig& fq, int val,
                     std::vector<std::int64_t> coeffs, int prec);
  // c * pi^e exactly, to the given precision.
  static Series monomial(const FqConfig& fq, std::int64_t c, int e, int prec);

  bool is_zero_to_prec() const { return c_.empty(); }
  int prec() const { return prec_; }
  // Exact valuation; only meaningful when nonzero-to-precision.
  int val() const {
    BTQ_CHECK(!c_.empty(), "val() of zero-to-precision series");
    return val_;
  }
  std::int64_t lead_coeff() const {
    BTQ_CHECK(!c_.empty(), "lead of zero-to-precision series");
    return c_[0];
  }
  // Coefficient of pi^e for any e < prec.
  std::int64_t coeff(int e) const {
    BTQ_CHECK(e < prec_, "coefficient beyond precision");
    if (c_.empty() || e < val_ || e >= val_ + static_cast<int>(c_.size()))
      return 0;
    return c_[static_cast<std::size_t>(e - val_)];
  }
  // Lower bound for the valuation that is certain at this precision.
  int val_lower_bound() const { return c_.empty() ? prec_ : val_; }

  Series truncated(int new_prec) const;
  // Multiplication by pi^n (exact reindexing).
  Series shifted(int n) const {
    return Series(prec_ + n, val_ + n, c_);
  }
  std::string to_string() const;  // "c*pi^v + ... + O(pi^N)"

  bool identical(const Series& o) const {
    return prec_ == o.prec_ && val_ == o.val_ && c_ == o.c_;
  }

private:
  Series(int prec, int val, std::vector<std::int64_t> c)
      : prec_(prec), val_(val), c_(std::move(c)) {}

  int prec_;
  int val_;
  std::vector<std::int64_t> c_;
};

Series series_add(const FqConfig& fq, const Series& a, const Series& b);
Series series_sub(const FqConfig& fq, const Series& a, const Series& b);
Series series_neg(const FqConfig& fq, const Series& a);
Series series_scalar_mul(const FqConfig& fq, std::int64_t s, const Series& a);
Series series_mul(const FqConfig& fq, const Series& a, const Series& b);
// Requires nonzero-to-precision; relative precision is preserved.
Series series_invert(const FqConfig& fq, const Series& a);
// Newton iteration from the exact leading-term root; requires even valuation
// and square leading coefficient. The root's leading coefficient is the
// least square root in [0,q).
Series series_sqrt(const FqConfig& fq, const Series& a);

// Expansion of f in powers of pi = 1/T, to absolute precision `prec`.
Series series_of_poly(const FqConfig& fq, const Poly& f, int prec);
// Expansion of f/g, g nonzero.
Series series_of_ratio(const PolyRing& R, const Poly& f, const Poly& g,
                       int prec);

}  // namespace btq
