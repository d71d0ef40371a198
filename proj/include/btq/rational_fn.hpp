#pragma once

#include <optional>

#include "btq/poly.hpp"
#include "btq/series.hpp"

namespace btq {

// Element of F = F_q(T), reduced to lowest terms with monic denominator.
struct RatFn {
  Poly num;
  Poly den = Poly::constant(1);

  bool is_zero() const { return num.is_zero(); }
  bool operator==(const RatFn& o) const { return num == o.num && den == o.den; }
};

// Field operations on F; every result is reduced with monic denominator.
struct FnField {
  PolyRing R;

  explicit FnField(FqConfig cfg) : R(cfg) {}

  RatFn make(const Poly& num, const Poly& den) const;
  RatFn of_poly(const Poly& p) const { return RatFn{p, Poly::constant(1)}; }
  RatFn of_scalar(std::int64_t c) const { return of_poly(Poly::constant(c)); }

  RatFn add(const RatFn& a, const RatFn& b) const;
  RatFn sub(const RatFn& a, const RatFn& b) const;
  RatFn neg(const RatFn& a) const;
  RatFn mul(const RatFn& a, const RatFn& b) const;
  RatFn div(const RatFn& a, const RatFn& b) const;
  RatFn inv(const RatFn& a) const;

  // ord at infinity: deg(den) - deg(num); nullopt for zero.
  std::optional<int> ord(const RatFn& a) const {
    if (a.is_zero()) return std::nullopt;
    return a.den.deg_nonzero() - a.num.deg_nonzero();
  }
  // Leading pi-adic coefficient, i.e. lead(num)/lead(den); zero input is an error.
  std::int64_t lead(const RatFn& a) const {
    BTQ_CHECK(!a.is_zero(), "lead of zero rational function");
    return R.fq.mul(a.num.lead(), R.fq.inv(a.den.lead()));
  }

  Series to_series(const RatFn& a, int prec) const {
    if (a.is_zero()) return Series::zero_to_prec(prec);
    return series_of_ratio(R, a.num, a.den, prec);
  }

  std::string to_string(const RatFn& a) const;
};

}  // namespace btq
