#pragma once

#include <memory>

#include "btq/rational_fn.hpp"

namespace btq {

// The quadratic extension F(sqrt(rad)) inside K = F_q((pi)), for a fixed
// radicand: monic, of even degree, not a square in F. Caches the series
// expansion of sqrt(rad) and extends it on demand.
class QuadContext {
public:
  QuadContext(FqConfig cfg, Poly radicand);

  const FnField& field() const { return F_; }
  const PolyRing& ring() const { return F_.R; }
  const FqConfig& fq() const { return F_.R.fq; }
  const Poly& radicand() const { return rad_; }
  int half_deg() const { return half_deg_; }  // deg(rad)/2 = -ord(sqrt(rad))

  // sqrt(rad) to at least the requested absolute precision.
  Series sqrt_series(int prec) const;

  bool same(const QuadContext& o) const {
    return fq().q() == o.fq().q() && rad_ == o.rad_;
  }

private:
  FnField F_;
  Poly rad_;
  int half_deg_;
  mutable Series root_;  // cached expansion; grows monotonically
};

using QuadCtxPtr = std::shared_ptr<const QuadContext>;

// u + v*sqrt(rad) with u, v in F; exact.
struct QuadElem {
  RatFn u;
  RatFn v;
  QuadCtxPtr ctx;

  bool is_zero() const { return u.is_zero() && v.is_zero(); }
  bool operator==(const QuadElem& o) const { return u == o.u && v == o.v; }
};

QuadElem quad_of(const QuadCtxPtr& ctx, const RatFn& u, const RatFn& v);
QuadElem quad_of_poly(const QuadCtxPtr& ctx, const Poly& p);
QuadElem quad_zero(const QuadCtxPtr& ctx);
QuadElem quad_one(const QuadCtxPtr& ctx);

QuadElem quad_add(const QuadElem& a, const QuadElem& b);
QuadElem quad_sub(const QuadElem& a, const QuadElem& b);
QuadElem quad_neg(const QuadElem& a);
QuadElem quad_mul(const QuadElem& a, const QuadElem& b);
QuadElem quad_conj(const QuadElem& a);     // u - v*sqrt(rad)
RatFn quad_norm(const QuadElem& a);        // u^2 - rad*v^2, in F
QuadElem quad_inv(const QuadElem& a);
QuadElem quad_div(const QuadElem& a, const QuadElem& b);

// Exact ord at infinity; nullopt means +infinity (the zero element).
// Leading-term cancellation between u and v*sqrt(rad) is resolved through
// the norm identity ord(x) + ord(conj x) = ord(norm x), which is exact:
// cancellation cannot happen in both conjugates at once.
std::optional<int> quad_ord(const QuadElem& a);

// Expansion correct modulo pi^{ord(a)+L}.
Series quad_to_series(const QuadElem& a, int rel_prec);
// Expansion to the given absolute precision.
Series quad_to_series_abs(const QuadElem& a, int abs_prec);

std::string quad_to_string(const QuadElem& a);

}  // namespace btq
