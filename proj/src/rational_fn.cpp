#include "btq/rational_fn.hpp"

namespace btq {

RatFn FnField::make(const Poly& num, const Poly& den) const {
  if (den.is_zero()) throw InputError("rational function with zero denominator");
  if (num.is_zero()) return RatFn{Poly::zero(), Poly::constant(1)};
  Poly g = R.gcd(num, den);
  Poly n = R.divmod(num, g).first;
  Poly d = R.divmod(den, g).first;
  std::int64_t il = R.fq.inv(d.lead());
  return RatFn{R.mul_scalar(n, il), R.mul_scalar(d, il)};
}

RatFn FnField::add(const RatFn& a, const RatFn& b) const {
  return make(R.add(R.mul(a.num, b.den), R.mul(b.num, a.den)),
              R.mul(a.den, b.den));
}

RatFn FnField::sub(const RatFn& a, const RatFn& b) const {
  return make(R.sub(R.mul(a.num, b.den), R.mul(b.num, a.den)),
              R.mul(a.den, b.den));
}

RatFn FnField::neg(const RatFn& a) const { return RatFn{R.neg(a.num), a.den}; }

RatFn FnField::mul(const RatFn& a, const RatFn& b) const {
  return make(R.mul(a.num, b.num), R.mul(a.den, b.den));
}

RatFn FnField::div(const RatFn& a, const RatFn& b) const {
  if (b.is_zero()) throw InputError("division by zero rational function");
  return make(R.mul(a.num, b.den), R.mul(a.den, b.num));
}

RatFn FnField::inv(const RatFn& a) const {
  if (a.is_zero()) throw InputError("inverse of zero rational function");
  return make(a.den, a.num);
}

std::string FnField::to_string(const RatFn& a) const {
  if (a.den == Poly::constant(1)) return R.to_string(a.num);
  return "(" + R.to_string(a.num) + ")/(" + R.to_string(a.den) + ")";
}

}  // namespace btq
