#include "btq/quad.hpp"

namespace btq {

QuadContext::QuadContext(FqConfig cfg, Poly radicand)
    : F_(cfg), rad_(std::move(radicand)), half_deg_(0),
      root_(Series::zero_to_prec(0)) {
  if (rad_.is_zero() || rad_.deg_nonzero() % 2 != 0 || !rad_.is_monic())
    throw InputError("quadratic radicand must be monic of even degree");
  half_deg_ = rad_.deg_nonzero() / 2;
  root_ = series_sqrt(fq(), series_of_poly(fq(), rad_, half_deg_ + 16));
  // reject perfect squares: reconstruct the would-be polynomial root from
  // the expansion and test it exactly
  std::vector<std::int64_t> rc(static_cast<std::size_t>(half_deg_) + 1, 0);
  for (int i = 0; i <= half_deg_; ++i) rc[static_cast<std::size_t>(i)] = root_.coeff(-i);
  Poly cand(std::move(rc));
  if (ring().mul(cand, cand) == rad_)
    throw InputError("quadratic radicand is a square in F_q[T]");
}

Series QuadContext::sqrt_series(int prec) const {
  if (root_.prec() < prec) {
    int target = std::max(prec, 2 * root_.prec() + 2 * half_deg_ + 8);
    root_ = series_sqrt(fq(), series_of_poly(fq(), rad_, target));
  }
  return root_.truncated(prec);
}

QuadElem quad_of(const QuadCtxPtr& ctx, const RatFn& u, const RatFn& v) {
  return QuadElem{u, v, ctx};
}
QuadElem quad_of_poly(const QuadCtxPtr& ctx, const Poly& p) {
  return QuadElem{ctx->field().of_poly(p), RatFn{}, ctx};
}
QuadElem quad_zero(const QuadCtxPtr& ctx) {
  return QuadElem{RatFn{}, RatFn{}, ctx};
}
QuadElem quad_one(const QuadCtxPtr& ctx) {
  return quad_of_poly(ctx, Poly::constant(1));
}

namespace {
const QuadCtxPtr& common_ctx(const QuadElem& a, const QuadElem& b) {
  BTQ_CHECK(a.ctx && b.ctx && a.ctx->same(*b.ctx),
            "mixed quadratic contexts");
  return a.ctx;
}
}  // namespace

QuadElem quad_add(const QuadElem& a, const QuadElem& b) {
  const auto& ctx = common_ctx(a, b);
  const FnField& F = ctx->field();
  return {F.add(a.u, b.u), F.add(a.v, b.v), ctx};
}

QuadElem quad_sub(const QuadElem& a, const QuadElem& b) {
  const auto& ctx = common_ctx(a, b);
  const FnField& F = ctx->field();
  return {F.sub(a.u, b.u), F.sub(a.v, b.v), ctx};
}

QuadElem quad_neg(const QuadElem& a) {
  const FnField& F = a.ctx->field();
  return {F.neg(a.u), F.neg(a.v), a.ctx};
}

QuadElem quad_mul(const QuadElem& a, const QuadElem& b) {
  const auto& ctx = common_ctx(a, b);
  const FnField& F = ctx->field();
  RatFn rad = F.of_poly(ctx->radicand());
  // (u1 + v1 s)(u2 + v2 s) = u1u2 + rad v1v2 + (u1v2 + v1u2) s
  return {F.add(F.mul(a.u, b.u), F.mul(rad, F.mul(a.v, b.v))),
          F.add(F.mul(a.u, b.v), F.mul(a.v, b.u)), ctx};
}

QuadElem quad_conj(const QuadElem& a) {
  const FnField& F = a.ctx->field();
  return {a.u, F.neg(a.v), a.ctx};
}

RatFn quad_norm(const QuadElem& a) {
  const FnField& F = a.ctx->field();
  RatFn rad = F.of_poly(a.ctx->radicand());
  return F.sub(F.mul(a.u, a.u), F.mul(rad, F.mul(a.v, a.v)));
}

QuadElem quad_inv(const QuadElem& a) {
  if (a.is_zero()) throw InputError("inverse of zero quadratic element");
  const FnField& F = a.ctx->field();
  RatFn n = quad_norm(a);
  BTQ_CHECK(!n.is_zero(), "norm of nonzero quadratic element vanished");
  QuadElem c = quad_conj(a);
  return {F.div(c.u, n), F.div(c.v, n), a.ctx};
}

QuadElem quad_div(const QuadElem& a, const QuadElem& b) {
  return quad_mul(a, quad_inv(b));
}

std::optional<int> quad_ord(const QuadElem& a) {
  if (a.is_zero()) return std::nullopt;
  const FnField& F = a.ctx->field();
  if (a.v.is_zero()) return *F.ord(a.u);
  int ov = *F.ord(a.v) - a.ctx->half_deg();  // ord of v*sqrt(rad)
  if (a.u.is_zero()) return ov;
  int ou = *F.ord(a.u);
  int m = std::min(ou, ov);
  if (ou != ov) return m;
  // same leading exponent: leading coefficients cancel iff they sum to zero
  // (sqrt(rad) has leading coefficient 1 since rad is monic)
  std::int64_t lu = F.lead(a.u);
  std::int64_t lv = F.lead(a.v);
  if (F.R.fq.add(lu, lv) != 0) return m;
  // cancellation: the conjugate then has ord exactly m, so
  // ord(a) = ord(norm) - m
  RatFn n = quad_norm(a);
  BTQ_CHECK(!n.is_zero(), "norm vanished for nonzero element");
  return *F.ord(n) - m;
}

Series quad_to_series_abs(const QuadElem& a, int abs_prec) {
  const FnField& F = a.ctx->field();
  Series su = F.to_series(a.u, abs_prec);
  if (a.v.is_zero()) return su;
  // v * sqrt(rad): expand v far enough that the product is certified to
  // abs_prec
  int ov = *F.ord(a.v);
  if (ov - a.ctx->half_deg() >= abs_prec) return su;  // v-part below window
  Series sr = a.ctx->sqrt_series(abs_prec - ov + 1);
  Series sv = F.to_series(a.v, abs_prec + a.ctx->half_deg() + 1);
  Series prod = series_mul(F.R.fq, sv, sr);
  BTQ_CHECK(prod.prec() >= abs_prec, "sqrt-part expansion fell short");
  return series_add(F.R.fq, su, prod.truncated(abs_prec));
}

Series quad_to_series(const QuadElem& a, int rel_prec) {
  BTQ_CHECK(rel_prec > 0, "nonpositive relative precision");
  auto o = quad_ord(a);
  if (!o) return Series::zero_to_prec(rel_prec);
  Series s = quad_to_series_abs(a, *o + rel_prec);
  BTQ_CHECK(!s.is_zero_to_prec() && s.val() == *o,
            "series valuation disagrees with exact ord");
  return s;
}

std::string quad_to_string(const QuadElem& a) {
  const FnField& F = a.ctx->field();
  if (a.v.is_zero()) return F.to_string(a.u);
  std::string s;
  if (!a.u.is_zero()) s += F.to_string(a.u) + " + ";
  s += "(" + F.to_string(a.v) + ")*sqrt(" + F.R.to_string(a.ctx->radicand()) + ")";
  return s;
}

}  // namespace btq
