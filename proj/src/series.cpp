#include "btq/series.hpp"

#include <algorithm>
#include <sstream>

namespace btq {

Series Series::make(const FqConfig& fq, int val,
                    std::vector<std::int64_t> coeffs, int prec) {
  for (auto& c : coeffs) c = fq.reduce(c);
  // strip leading zeros, advancing the valuation
  std::size_t lead = 0;
  while (lead < coeffs.size() && coeffs[lead] == 0) ++lead;
  if (lead == coeffs.size() || val + static_cast<int>(lead) >= prec)
    return zero_to_prec(prec);
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
  val += static_cast<int>(lead);
  BTQ_CHECK(val + static_cast<int>(coeffs.size()) <= prec,
            "series coefficients extend past stated precision");
  coeffs.resize(static_cast<std::size_t>(prec - val), 0);
  return Series(prec, val, std::move(coeffs));
}

Series Series::monomial(const FqConfig& fq, std::int64_t c, int e, int prec) {
  BTQ_CHECK(e < prec, "monomial beyond precision");
  return make(fq, e, {fq.reduce(c)}, prec);
}

Series Series::truncated(int new_prec) const {
  BTQ_CHECK(new_prec <= prec_, "cannot extend precision by truncation");
  if (c_.empty() || val_ >= new_prec) return zero_to_prec(new_prec);
  std::vector<std::int64_t> c(c_.begin(), c_.begin() + (new_prec - val_));
  return Series(new_prec, val_, std::move(c));
}

std::string Series::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int e = val_; !c_.empty() && e < prec_; ++e) {
    std::int64_t v = coeff(e);
    if (v == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << v;
    if (e != 0) os << "*pi^" << e;
  }
  if (first) os << "0";
  os << " + O(pi^" << prec_ << ")";
  return os.str();
}

Series series_add(const FqConfig& fq, const Series& a, const Series& b) {
  int prec = std::min(a.prec(), b.prec());
  int lo = std::min(a.val_lower_bound(), b.val_lower_bound());
  if (lo >= prec) return Series::zero_to_prec(prec);
  std::vector<std::int64_t> c(static_cast<std::size_t>(prec - lo), 0);
  for (int e = lo; e < prec; ++e)
    c[static_cast<std::size_t>(e - lo)] = fq.add(a.coeff(e), b.coeff(e));
  return Series::make(fq, lo, std::move(c), prec);
}

Series series_neg(const FqConfig& fq, const Series& a) {
  return series_scalar_mul(fq, fq.q() - 1, a);
}

Series series_sub(const FqConfig& fq, const Series& a, const Series& b) {
  return series_add(fq, a, series_neg(fq, b));
}

Series series_scalar_mul(const FqConfig& fq, std::int64_t s, const Series& a) {
  s = fq.reduce(s);
  if (s == 0 || a.is_zero_to_prec()) return Series::zero_to_prec(a.prec());
  std::vector<std::int64_t> c(static_cast<std::size_t>(a.prec() - a.val()));
  for (int e = a.val(); e < a.prec(); ++e)
    c[static_cast<std::size_t>(e - a.val())] = fq.mul(s, a.coeff(e));
  return Series::make(fq, a.val(), std::move(c), a.prec());
}

Series series_mul(const FqConfig& fq, const Series& a, const Series& b) {
  // x = x0 + O(pi^pa), y = y0 + O(pi^pb)
  // xy = x0 y0 + O(pi^{pa + v(y)}) + O(pi^{pb + v(x)})
  int prec = std::min(a.prec() + b.val_lower_bound(),
                      b.prec() + a.val_lower_bound());
  if (a.is_zero_to_prec() || b.is_zero_to_prec())
    return Series::zero_to_prec(prec);
  int lo = a.val() + b.val();
  if (lo >= prec) return Series::zero_to_prec(prec);
  std::vector<std::int64_t> c(static_cast<std::size_t>(prec - lo), 0);
  for (int i = a.val(); i < a.prec(); ++i) {
    std::int64_t ai = a.coeff(i);
    if (ai == 0) continue;
    for (int j = b.val(); j < b.prec() && i + j < prec; ++j) {
      auto idx = static_cast<std::size_t>(i + j - lo);
      c[idx] = fq.add(c[idx], fq.mul(ai, b.coeff(j)));
    }
  }
  return Series::make(fq, lo, std::move(c), prec);
}

Series series_invert(const FqConfig& fq, const Series& a) {
  if (a.is_zero_to_prec())
    throw InsufficientPrecision("cannot invert a series that is zero to precision");
  int L = a.prec() - a.val();  // relative precision, preserved
  std::int64_t u0 = fq.inv(a.lead_coeff());
  // long division: b with a*b = 1, coefficient by coefficient
  std::vector<std::int64_t> b(static_cast<std::size_t>(L), 0);
  b[0] = u0;
  for (int n = 1; n < L; ++n) {
    std::int64_t s = 0;
    for (int k = 1; k <= n; ++k)
      s = fq.add(s, fq.mul(a.coeff(a.val() + k), b[static_cast<std::size_t>(n - k)]));
    b[static_cast<std::size_t>(n)] = fq.mul(fq.neg(s), u0);
  }
  return Series::make(fq, -a.val(), std::move(b), -a.val() + L);
}

Series series_sqrt(const FqConfig& fq, const Series& a) {
  if (a.is_zero_to_prec())
    throw InsufficientPrecision("sqrt of a series that is zero to precision");
  if (a.val() % 2 != 0)
    throw OddValuation("series_sqrt: odd valuation " + std::to_string(a.val()));
  if (!fq.is_square(a.lead_coeff()))
    throw NonSquareLeadingCoeff("series_sqrt: leading coefficient " +
                                std::to_string(a.lead_coeff()) +
                                " is not a square mod " + std::to_string(fq.q()));
  int L = a.prec() - a.val();
  // normalize to a unit power series u = 1*pi^0 mix: work with the shifted
  // unit part, then shift back by val/2
  Series u = a.shifted(-a.val());
  std::int64_t r0 = fq.sqrt(u.lead_coeff());
  std::int64_t half = fq.inv(2);
  Series x = Series::monomial(fq, r0, 0, 1);
  while (x.prec() < L) {
    int target = std::min(2 * x.prec(), L);
    // lift x to the target window before refining
    Series xt = Series::make(
        fq, x.val(),
        [&] {
          std::vector<std::int64_t> c;
          for (int e = x.val(); e < x.prec(); ++e) c.push_back(x.coeff(e));
          return c;
        }(),
        target);
    Series quot = series_invert(fq, xt);
    quot = series_mul(fq, u.truncated(target), quot).truncated(target);
    x = series_scalar_mul(fq, half, series_add(fq, xt, quot));
    BTQ_CHECK(!x.is_zero_to_prec() && x.val() == 0,
              "sqrt iteration lost its leading term");
  }
  return x.shifted(a.val() / 2);
}

Series series_of_poly(const FqConfig& fq, const Poly& f, int prec) {
  if (f.is_zero()) return Series::zero_to_prec(prec);
  int d = f.deg_nonzero();
  std::vector<std::int64_t> c;
  for (int i = d; i >= 0 && -i < prec; --i) c.push_back(f.coeff(i));
  return Series::make(fq, -d, std::move(c), prec);
}

Series series_of_ratio(const PolyRing& R, const Poly& f, const Poly& g,
                       int prec) {
  if (g.is_zero()) throw InputError("series_of_ratio: zero denominator");
  if (f.is_zero()) return Series::zero_to_prec(prec);
  int df = f.deg_nonzero(), dg = g.deg_nonzero();
  // pad so the quotient carries enough certified terms
  int extra = prec - (dg - df);
  if (extra < 1) extra = 1;
  Series sf = series_of_poly(R.fq, f, -df + extra + 1);
  Series sg = series_of_poly(R.fq, g, -dg + extra + 1);
  Series out = series_mul(R.fq, sf, series_invert(R.fq, sg));
  BTQ_CHECK(out.prec() >= prec, "ratio expansion fell short of target precision");
  return out.truncated(prec);
}

}  // namespace btq
