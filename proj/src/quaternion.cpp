#include "btq/quaternion.hpp"

#include <algorithm>

namespace btq {

RamSet make_ram_set(const PolyRing& R, std::vector<Poly> places) {
  if (places.empty() || places.size() % 2 != 0)
    throw InputError(
        "ramification set must be nonempty of even cardinality (the algebra "
        "splits at infinity)");
  std::sort(places.begin(), places.end());
  for (std::size_t i = 0; i < places.size(); ++i) {
    const Poly& f = places[i];
    if (f.is_zero() || f.is_constant() || !f.is_monic() || !is_irreducible(R, f))
      throw InputError("ramified places must be monic irreducible: " +
                       R.to_string(f));
    if (i > 0 && places[i - 1] == f)
      throw InputError("ramified places must be pairwise distinct");
  }
  RamSet ram;
  ram.places = std::move(places);
  ram.odd_flag = true;
  ram.r_poly = Poly::constant(1);
  for (const Poly& f : ram.places) {
    if (f.deg_nonzero() % 2 == 0) ram.odd_flag = false;
    ram.r_poly = R.mul(ram.r_poly, f);
  }
  return ram;
}

AlgebraData build_algebra(const PolyRing& R, std::vector<Poly> ram_places) {
  RamSet ram = make_ram_set(R, std::move(ram_places));
  Poly a_param, b_param, level;
  std::optional<std::int64_t> xi;

  if (ram.odd_flag) {
    // presentation (r, xi); the standard order is maximal (constant level)
    xi = fq_nonsquare(R.fq);
    a_param = ram.r_poly;
    b_param = Poly::constant(*xi);
    level = Poly::constant(*xi);
  } else {
    // pick a residue that is a nonsquare mod every f_x, glue by CRT, then
    // scan a + r*b for the first monic irreducible candidate of even degree
    std::vector<Poly> residues;
    for (const Poly& f : ram.places) {
      Poly r;
      for (std::uint64_t n = 1;; ++n) {
        Poly cand = R.from_index(n);
        if (cand.deg_nonzero() >= f.deg_nonzero())
          throw InternalError("no nonsquare residue found mod " + R.to_string(f));
        if (legendre(R, cand, f) == -1) { r = cand; break; }
      }
      residues.push_back(r);
    }
    Poly a0 = crt(R, residues, ram.places);
    Poly found;
    for (std::uint64_t n = 0;; ++n) {
      Poly cand = R.add(a0, R.mul(ram.r_poly, R.from_index(n)));
      if (cand.is_zero() || cand.is_constant()) continue;
      if (!cand.is_monic() || cand.deg_nonzero() % 2 != 0) continue;
      if (!is_irreducible(R, cand)) continue;
      found = cand;
      break;
    }
    a_param = found;
    b_param = ram.r_poly;
    level = found;
    for (const Poly& f : ram.places)
      BTQ_CHECK(legendre(R, a_param, f) == -1,
                "candidate lost its nonsquare residue");
  }

  AlgebraData alg{R, std::move(ram), a_param, b_param, level, xi,
                  std::make_shared<QuadContext>(R.fq, a_param)};

  // ramification re-verification via Hilbert symbols
  auto places = ramified_places(R, alg.a_param, alg.b_param);
  std::vector<Place> expected;
  for (const Poly& f : alg.ram.places) expected.push_back(Place::finite(f));
  BTQ_CHECK(places == expected,
            "constructed presentation does not ramify exactly at R");
  return alg;
}

namespace {

// ord_x and the residual unit part of a at the place x; at infinity the
// residue of a unit is its leading coefficient.
struct LocalUnit {
  int ord;
  Poly unit;
};

LocalUnit local_unit(const PolyRing& R, Poly a, const Place& x) {
  if (x.at_infinity) return {-a.deg_nonzero(), Poly::constant(a.lead())};
  int ord = 0;
  for (;;) {
    auto [quo, rem] = R.divmod(a, x.f);
    if (!rem.is_zero()) break;
    a = quo;
    ++ord;
  }
  return {ord, R.mod(a, x.f)};
}

int chi(const PolyRing& R, const Poly& u, const Place& x) {
  if (x.at_infinity) {
    BTQ_CHECK(!u.is_zero() && u.is_constant(), "residue at infinity not a unit");
    return R.fq.is_square(u.coeff(0)) ? 1 : -1;
  }
  int l = legendre(R, u, x.f);
  BTQ_CHECK(l != 0, "residue is not a unit at the place");
  return l;
}

}  // namespace

int hilbert_symbol(const PolyRing& R, const Poly& a, const Poly& b,
                   const Place& x) {
  if (a.is_zero() || b.is_zero()) throw InputError("hilbert symbol of zero");
  LocalUnit la = local_unit(R, a, x);
  LocalUnit lb = local_unit(R, b, x);
  // class of (-1)^{alpha beta} a1^beta b1^{-alpha}; the quadratic character
  // only sees exponents mod 2, and chi(u^{-1}) = chi(u)
  int s = 1;
  if ((la.ord % 2 != 0) && (lb.ord % 2 != 0))
    s *= chi(R, Poly::constant(R.fq.q() - 1), x);
  if (lb.ord % 2 != 0) s *= chi(R, la.unit, x);
  if (la.ord % 2 != 0) s *= chi(R, lb.unit, x);
  return s;
}

std::vector<Place> ramified_places(const PolyRing& R, const Poly& a,
                                   const Poly& b) {
  if (a.is_zero() || b.is_zero())
    throw InputError("ramified_places of degenerate algebra");
  std::vector<Place> out;
  Poly ab = R.mul(a, b);
  std::vector<Place> candidates;
  if (!ab.is_constant())
    for (const Poly& f : support(R, ab)) candidates.push_back(Place::finite(f));
  candidates.push_back(Place::infinity());
  for (const Place& x : candidates)
    if (hilbert_symbol(R, a, b, x) == -1) out.push_back(x);
  BTQ_CHECK(out.size() % 2 == 0, "odd number of ramified places");
  return out;
}

QuatElem quat_mul(const AlgebraData& alg, const QuatElem& x, const QuatElem& y) {
  const PolyRing& R = alg.R;
  const Poly& A = alg.a_param;
  const Poly& B = alg.b_param;
  auto m = [&](const Poly& p, const Poly& q) { return R.mul(p, q); };
  // basis relations: i^2 = A, j^2 = B, ij = -ji
  Poly a = R.add(R.add(m(x.a, y.a), m(A, m(x.b, y.b))),
                 R.sub(m(B, m(x.c, y.c)), m(m(A, B), m(x.d, y.d))));
  Poly b = R.add(R.add(m(x.a, y.b), m(x.b, y.a)),
                 R.sub(m(B, m(x.d, y.c)), m(B, m(x.c, y.d))));
  Poly c = R.add(R.add(m(x.a, y.c), m(x.c, y.a)),
                 R.sub(m(A, m(x.b, y.d)), m(A, m(x.d, y.b))));
  Poly d = R.add(R.add(m(x.a, y.d), m(x.d, y.a)),
                 R.sub(m(x.b, y.c), m(x.c, y.b)));
  return {a, b, c, d};
}

QuatElem quat_conj(const AlgebraData& alg, const QuatElem& x) {
  const PolyRing& R = alg.R;
  return {x.a, R.neg(x.b), R.neg(x.c), R.neg(x.d)};
}

QuatElem quat_add(const AlgebraData& alg, const QuatElem& x, const QuatElem& y) {
  const PolyRing& R = alg.R;
  return {R.add(x.a, y.a), R.add(x.b, y.b), R.add(x.c, y.c), R.add(x.d, y.d)};
}

QuatElem quat_scalar_mul(const AlgebraData& alg, std::int64_t s,
                         const QuatElem& x) {
  const PolyRing& R = alg.R;
  return {R.mul_scalar(x.a, s), R.mul_scalar(x.b, s), R.mul_scalar(x.c, s),
          R.mul_scalar(x.d, s)};
}

Poly nr(const AlgebraData& alg, const QuatElem& x) {
  const PolyRing& R = alg.R;
  Poly t = R.sub(R.mul(x.a, x.a), R.mul(alg.a_param, R.mul(x.b, x.b)));
  t = R.sub(t, R.mul(alg.b_param, R.mul(x.c, x.c)));
  return R.add(t, R.mul(R.mul(alg.a_param, alg.b_param), R.mul(x.d, x.d)));
}

Poly tr(const AlgebraData& alg, const QuatElem& x) {
  return alg.R.mul_scalar(x.a, 2);
}

bool is_unit(const AlgebraData& alg, const QuatElem& x) {
  Poly n = nr(alg, x);
  return !n.is_zero() && n.is_constant();
}

int norm_deg(const QuatElem& x) {
  auto d = [](const Poly& p) { return p.is_zero() ? 0 : p.deg_nonzero(); };
  return std::max(std::max(d(x.a), d(x.b)), std::max(d(x.c), d(x.d)));
}

UnitElem make_unit(const AlgebraData& alg, const QuatElem& x) {
  Poly n = nr(alg, x);
  if (n.is_zero() || !n.is_constant())
    throw InputError("element is not a unit of the order");
  return UnitElem{x, n.coeff(0)};
}

UnitElem unit_mul(const AlgebraData& alg, const UnitElem& x, const UnitElem& y) {
  UnitElem r;
  r.el = quat_mul(alg, x.el, y.el);
  r.kappa = alg.fq().mul(x.kappa, y.kappa);
  return r;
}

UnitElem unit_inv(const AlgebraData& alg, const UnitElem& x) {
  std::int64_t ik = alg.fq().inv(x.kappa);
  UnitElem r;
  r.el = quat_scalar_mul(alg, ik, quat_conj(alg, x.el));
  r.kappa = ik;
  return r;
}

bool is_elliptic(const AlgebraData& alg, const UnitElem& x) {
  (void)alg;
  return x.el.a.is_zero() || x.el.a.is_constant();
}

bool is_scalar(const UnitElem& x) {
  return x.el.b.is_zero() && x.el.c.is_zero() && x.el.d.is_zero() &&
         x.el.a.is_constant() && !x.el.a.is_zero();
}

QuadMat embed(const AlgebraData& alg, const QuatElem& x) {
  const auto& ctx = alg.quad_ctx;
  const FnField& F = ctx->field();
  RatFn a = F.of_poly(x.a), b = F.of_poly(x.b);
  RatFn c = F.of_poly(x.c), d = F.of_poly(x.d);
  RatFn bp = F.of_poly(alg.b_param);
  return {quad_of(ctx, a, b), quad_of(ctx, c, d),
          quad_of(ctx, F.mul(bp, c), F.neg(F.mul(bp, d))),
          quad_of(ctx, a, F.neg(b))};
}

QuadMat mat_mul(const QuadMat& x, const QuadMat& y) {
  return {quad_add(quad_mul(x.m00, y.m00), quad_mul(x.m01, y.m10)),
          quad_add(quad_mul(x.m00, y.m01), quad_mul(x.m01, y.m11)),
          quad_add(quad_mul(x.m10, y.m00), quad_mul(x.m11, y.m10)),
          quad_add(quad_mul(x.m10, y.m01), quad_mul(x.m11, y.m11))};
}

QuadElem mat_det(const QuadMat& x) {
  return quad_sub(quad_mul(x.m00, x.m11), quad_mul(x.m01, x.m10));
}

namespace {

std::int64_t qpow_checked(std::int64_t q, int d) {
  std::int64_t r = 1;
  for (int i = 0; i < d; ++i) r = Rational::checked(static_cast<__int128>(r) * q);
  return r;
}

std::int64_t two_pow_r_minus_1(const RamSet& ram) {
  std::int64_t t = 1;
  for (std::size_t i = 1; i < ram.places.size(); ++i) t *= 2;
  return t;
}

}  // namespace

Rational g_of_r(const FqConfig& fq, const RamSet& ram) {
  std::int64_t q = fq.q();
  Rational prod(1);
  for (const Poly& f : ram.places)
    prod = prod * Rational(qpow_checked(q, f.deg_nonzero()) - 1);
  Rational g = Rational(1) + prod / Rational(q * q - 1);
  if (ram.odd_flag)
    g = g - Rational(q, q + 1) * Rational(two_pow_r_minus_1(ram));
  return g;
}

Rational formula_vertex_count(const AlgebraData& alg) {
  std::int64_t q = alg.fq().q();
  Rational prod(1);
  for (const Poly& f : alg.ram.places)
    prod = prod * Rational(qpow_checked(q, f.deg_nonzero()) - 1);
  Rational V;
  if (alg.ram.odd_flag) {
    V = Rational(2) / Rational((q - 1) * (q * q - 1)) * prod +
        Rational(q, q + 1) * Rational(two_pow_r_minus_1(alg.ram));
  } else {
    std::int64_t qa = qpow_checked(q, alg.level.deg_nonzero());
    V = Rational(2 * (qa + 1)) / Rational((q - 1) * (q * q - 1)) * prod;
  }
  BTQ_CHECK(V.is_integer() && V.num > 0,
            "vertex-count formula did not produce a positive integer");
  return V;
}

std::int64_t formula_free_rank(const AlgebraData& alg) {
  if (alg.ram.odd_flag)
    throw InputError("free rank requires the torsion-free case");
  std::int64_t qa = qpow_checked(alg.fq().q(), alg.level.deg_nonzero());
  Rational r =
      Rational(1) + Rational(qa + 1) * (g_of_r(alg.fq(), alg.ram) - Rational(1));
  BTQ_CHECK(r.is_integer(), "free rank formula did not produce an integer");
  return r.as_integer();
}

Rational formula_gen_bound(const AlgebraData& alg) {
  if (!alg.ram.odd_flag)
    throw InputError("generator-count bound applies to the torsion case");
  return g_of_r(alg.fq(), alg.ram) + Rational(two_pow_r_minus_1(alg.ram));
}

}  // namespace btq
