#pragma once

#include <optional>
#include <set>
#include <vector>

#include "btq/arith.hpp"
#include "btq/quad.hpp"
#include "btq/ratnum.hpp"

namespace btq {

// A place of F = F_q(T): a monic irreducible polynomial, or infinity.
struct Place {
  bool at_infinity = false;
  Poly f;  // meaningful when finite

  static Place infinity() { return Place{true, Poly::zero()}; }
  static Place finite(Poly p) { return Place{false, std::move(p)}; }
  bool operator==(const Place& o) const {
    return at_infinity == o.at_infinity && f == o.f;
  }
  bool operator<(const Place& o) const {
    if (at_infinity != o.at_infinity) return !at_infinity;
    return f < o.f;
  }
};

// The finite ramified places of the algebra, with r = prod f_x and
// odd_flag = 1 iff every deg(f_x) is odd.
struct RamSet {
  std::vector<Poly> places;  // sorted, monic irreducible, pairwise distinct
  bool odd_flag = false;
  Poly r_poly;
};

RamSet make_ram_set(const PolyRing& R, std::vector<Poly> places);

// The fixed presentation (i^2 = a_param, j^2 = b_param) of the division
// algebra ramified exactly at ram, together with the standard order's
// Eichler level. a_param is always monic of even degree so sqrt(a_param)
// lives in K and drives the 2x2 embedding.
struct AlgebraData {
  PolyRing R;
  RamSet ram;
  Poly a_param;
  Poly b_param;
  Poly level;                       // Eichler level of the standard order
  std::optional<std::int64_t> xi;   // the nonsquare, when odd_flag = 1
  QuadCtxPtr quad_ctx;              // radicand = a_param

  const FqConfig& fq() const { return R.fq; }
  int deg_level_r() const {        // deg of (level * r); the theorem scale
    return (level.is_constant() ? 0 : level.deg_nonzero()) +
           ram.r_poly.deg_nonzero();
  }
};

// Deterministic construction following the two parity cases; the candidate
// scan runs in index order so outputs are reproducible.
AlgebraData build_algebra(const PolyRing& R, std::vector<Poly> ram_places);

// Tame Hilbert symbol (a,b)_x over F_q(T), q odd. At a finite place x with
// alpha = ord_x(a), beta = ord_x(b), this is the quadratic-residue class of
// (-1)^{alpha beta} a^beta b^{-alpha}; at infinity the same rule with
// ord = -deg and residue field F_q.
int hilbert_symbol(const PolyRing& R, const Poly& a, const Poly& b,
                   const Place& x);

// Places where H(a,b) ramifies: support of a*b plus infinity, filtered by
// the symbol. Always of even cardinality.
std::vector<Place> ramified_places(const PolyRing& R, const Poly& a,
                                   const Poly& b);

// Element a + b i + c j + d ij of the standard order.
struct QuatElem {
  Poly a, b, c, d;
  bool operator==(const QuatElem& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool is_zero() const {
    return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero();
  }
  static QuatElem one() { return {Poly::constant(1), {}, {}, {}}; }
  static QuatElem scalar(std::int64_t s) { return {Poly::constant(s), {}, {}, {}}; }
};

QuatElem quat_mul(const AlgebraData& alg, const QuatElem& x, const QuatElem& y);
QuatElem quat_conj(const AlgebraData& alg, const QuatElem& x);
QuatElem quat_add(const AlgebraData& alg, const QuatElem& x, const QuatElem& y);
QuatElem quat_scalar_mul(const AlgebraData& alg, std::int64_t s, const QuatElem& x);
Poly nr(const AlgebraData& alg, const QuatElem& x);  // a^2 - a_p b^2 - b_p c^2 + a_p b_p d^2
Poly tr(const AlgebraData& alg, const QuatElem& x);  // 2a

bool is_unit(const AlgebraData& alg, const QuatElem& x);
// max(deg a, deg b, deg c, deg d) with deg(0) = 0.
int norm_deg(const QuatElem& x);

// A unit of the order with its (constant) reduced norm cached.
struct UnitElem {
  QuatElem el;
  std::int64_t kappa = 1;

  bool operator==(const UnitElem& o) const { return el == o.el; }
};

UnitElem make_unit(const AlgebraData& alg, const QuatElem& x);
UnitElem unit_mul(const AlgebraData& alg, const UnitElem& x, const UnitElem& y);
UnitElem unit_inv(const AlgebraData& alg, const UnitElem& x);
bool is_elliptic(const AlgebraData& alg, const UnitElem& x);  // deg(a) <= 0
bool is_scalar(const UnitElem& x);

// 2x2 image over F(sqrt(a_param)):
//   ( a + b s      c + d s   )
//   ( b_p (c-d s)  a - b s   )     with s = sqrt(a_param).
struct QuadMat {
  QuadElem m00, m01, m10, m11;
};
QuadMat embed(const AlgebraData& alg, const QuatElem& x);
QuadMat mat_mul(const QuadMat& x, const QuadMat& y);
QuadElem mat_det(const QuadMat& x);

// Closed-form counts, all exact rationals.
Rational g_of_r(const FqConfig& fq, const RamSet& ram);
Rational formula_vertex_count(const AlgebraData& alg);
std::int64_t formula_free_rank(const AlgebraData& alg);   // odd_flag = 0 only
Rational formula_gen_bound(const AlgebraData& alg);       // odd_flag = 1 only

}  // namespace btq
