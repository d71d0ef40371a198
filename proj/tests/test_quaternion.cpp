#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "btq/quaternion.hpp"

using namespace btq;

namespace {

AlgebraData case_a() {  // q=3, R={T, T+1}: all degrees odd
  PolyRing R(3);
  return build_algebra(R, {R.parse("T"), R.parse("T+1")});
}

AlgebraData case_b() {  // q=3, R={T, T^2+1}: mixed parity
  PolyRing R(3);
  return build_algebra(R, {R.parse("T"), R.parse("T^2+1")});
}

QuatElem rand_elem(std::mt19937_64& rng, const AlgebraData& alg, int maxdeg) {
  std::uint64_t lim = 1;
  for (int i = 0; i <= maxdeg; ++i) lim *= static_cast<std::uint64_t>(alg.fq().q());
  std::uniform_int_distribution<std::uint64_t> d(0, lim - 1);
  auto p = [&] { return alg.R.from_index(d(rng)); };
  return QuatElem{p(), p(), p(), p()};
}

// random unit: small products of scanned units of the algebra
UnitElem rand_unit(std::mt19937_64& rng, const AlgebraData& alg,
                   const std::vector<UnitElem>& seeds, int len) {
  UnitElem u{QuatElem::one(), 1};
  std::uniform_int_distribution<std::size_t> pick(0, seeds.size() - 1);
  std::uniform_int_distribution<int> flip(0, 1);
  for (int i = 0; i < len; ++i) {
    UnitElem g = seeds[pick(rng)];
    if (flip(rng)) g = unit_inv(alg, g);
    u = unit_mul(alg, u, g);
  }
  return u;
}

std::vector<UnitElem> seed_units(const AlgebraData& alg) {
  std::vector<UnitElem> out;
  std::uint64_t lim = 81;
  for (std::uint64_t na = 0; na < lim && out.size() < 12; ++na)
    for (std::uint64_t nb = 0; nb < lim && out.size() < 12; ++nb)
      for (std::uint64_t nc = 0; nc < lim && out.size() < 12; ++nc)
        for (std::uint64_t nd = 0; nd < lim && out.size() < 12; ++nd) {
          QuatElem x{alg.R.from_index(na), alg.R.from_index(nb),
                     alg.R.from_index(nc), alg.R.from_index(nd)};
          if (x.is_zero()) continue;
          if (x.b.is_zero() && x.c.is_zero() && x.d.is_zero()) continue;
          if (!is_unit(alg, x)) continue;
          out.push_back(make_unit(alg, x));
        }
  return out;
}

}  // namespace

TEST_CASE("case A: presentation (T^2+T, 2) with constant level") {
  AlgebraData alg = case_a();
  CHECK(alg.ram.odd_flag);
  CHECK(alg.a_param == alg.R.parse("T^2+T"));
  CHECK(alg.b_param == Poly::constant(2));
  CHECK(alg.level == Poly::constant(2));
  REQUIRE(alg.xi.has_value());
  CHECK(*alg.xi == 2);
  CHECK(alg.deg_level_r() == 2);
}

TEST_CASE("case B: even-degree irreducible first parameter") {
  AlgebraData alg = case_b();
  CHECK(!alg.ram.odd_flag);
  CHECK(alg.b_param == alg.R.parse("T^3+T"));
  CHECK(alg.a_param.is_monic());
  CHECK(alg.a_param.deg_nonzero() % 2 == 0);
  CHECK(is_irreducible(alg.R, alg.a_param));
  CHECK(legendre(alg.R, alg.a_param, alg.R.parse("T")) == -1);
  CHECK(legendre(alg.R, alg.a_param, alg.R.parse("T^2+1")) == -1);
  CHECK(alg.level == alg.a_param);
  // the deterministic scan lands on the CRT solution itself here
  CHECK(alg.a_param == alg.R.parse("T^2+T+2"));
  CHECK(alg.deg_level_r() == 5);
}

TEST_CASE("invalid ramification sets are rejected") {
  PolyRing R(3);
  CHECK_THROWS_AS(build_algebra(R, {R.parse("T")}), InputError);
  CHECK_THROWS_AS(build_algebra(R, {R.parse("T"), R.parse("T")}), InputError);
  CHECK_THROWS_AS(build_algebra(R, {R.parse("T^2"), R.parse("T")}), InputError);
}

TEST_CASE("hilbert symbol: ramified exactly on R") {
  AlgebraData alg = case_a();
  for (const Poly& f : alg.ram.places)
    CHECK(hilbert_symbol(alg.R, alg.a_param, alg.b_param, Place::finite(f)) == -1);
  CHECK(hilbert_symbol(alg.R, alg.a_param, alg.b_param, Place::infinity()) == 1);
}

TEST_CASE("hilbert symbol: squares in the first slot are trivial") {
  PolyRing R(3);
  Poly s = R.parse("T+2");
  Poly s2 = R.mul(s, s);
  for (const Poly& b : {R.parse("T"), R.parse("T^2+1"), R.parse("2*T+1")}) {
    CHECK(hilbert_symbol(R, s2, b, Place::finite(R.parse("T"))) == 1);
    CHECK(hilbert_symbol(R, s2, b, Place::finite(R.parse("T+1"))) == 1);
    CHECK(hilbert_symbol(R, s2, b, Place::infinity()) == 1);
  }
}

TEST_CASE("hilbert product formula on random pairs") {
  PolyRing R(3);
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<std::uint64_t> d(1, 3 * 3 * 3 * 3 - 1);
  for (int it = 0; it < 120; ++it) {
    Poly a = R.from_index(d(rng));
    Poly b = R.from_index(d(rng));
    Poly ab = R.mul(a, b);
    int prod = hilbert_symbol(R, a, b, Place::infinity());
    if (!ab.is_constant())
      for (const Poly& f : support(R, ab))
        prod *= hilbert_symbol(R, a, b, Place::finite(f));
    CHECK(prod == 1);
  }
}

TEST_CASE("ramified places recover R for both cases") {
  for (AlgebraData alg : {case_a(), case_b()}) {
    auto places = ramified_places(alg.R, alg.a_param, alg.b_param);
    REQUIRE(places.size() == alg.ram.places.size());
    for (std::size_t i = 0; i < places.size(); ++i) {
      CHECK(!places[i].at_infinity);
      CHECK(places[i].f == alg.ram.places[i]);
    }
  }
}

TEST_CASE("split algebra H(1,*) ramifies nowhere") {
  PolyRing R(3);
  CHECK(ramified_places(R, Poly::constant(1), R.parse("T^3+2*T+1")).empty());
}

TEST_CASE("ramified places of every small two-element R (exhaustive)") {
  PolyRing R(3);
  std::vector<Poly> irr;
  for (std::uint64_t n = 3; n < 81; ++n) {
    Poly f = R.from_index(n);
    if (f.is_monic() && is_irreducible(R, f)) irr.push_back(f);
  }
  int built = 0;
  for (std::size_t i = 0; i < irr.size(); ++i)
    for (std::size_t j = i + 1; j < irr.size(); ++j) {
      if (irr[i].deg_nonzero() + irr[j].deg_nonzero() > 5) continue;
      AlgebraData alg = build_algebra(R, {irr[i], irr[j]});
      auto places = ramified_places(alg.R, alg.a_param, alg.b_param);
      REQUIRE(places.size() == 2);
      CHECK(places[0].f == alg.ram.places[0]);
      CHECK(places[1].f == alg.ram.places[1]);
      ++built;
    }
  CHECK(built >= 10);
}

TEST_CASE("norm and trace basics") {
  AlgebraData alg = case_a();
  CHECK(nr(alg, QuatElem::one()) == Poly::constant(1));
  CHECK(tr(alg, QuatElem::one()) == Poly::constant(2));
  QuatElem j{Poly::zero(), Poly::zero(), Poly::constant(1), Poly::zero()};
  CHECK(nr(alg, j) == alg.R.neg(alg.b_param));
}

TEST_CASE("norm is multiplicative and conj is an anti-involution") {
  AlgebraData alg = case_b();
  std::mt19937_64 rng(7);
  for (int it = 0; it < 150; ++it) {
    QuatElem x = rand_elem(rng, alg, 2);
    QuatElem y = rand_elem(rng, alg, 2);
    CHECK(nr(alg, quat_mul(alg, x, y)) == alg.R.mul(nr(alg, x), nr(alg, y)));
    QuatElem lhs = quat_conj(alg, quat_mul(alg, x, y));
    QuatElem rhs = quat_mul(alg, quat_conj(alg, y), quat_conj(alg, x));
    CHECK(lhs == rhs);
    QuatElem n = quat_mul(alg, x, quat_conj(alg, x));
    CHECK(n.a == nr(alg, x));
    CHECK(n.b.is_zero());
    CHECK(n.c.is_zero());
    CHECK(n.d.is_zero());
  }
}

TEST_CASE("unit and elliptic classification examples") {
  AlgebraData alg = case_a();
  QuatElem s = QuatElem::scalar(2);
  CHECK(is_unit(alg, s));
  UnitElem su = make_unit(alg, s);
  CHECK(is_elliptic(alg, su));
  CHECK(norm_deg(s) == 0);
  QuatElem oj{Poly::constant(1), Poly::zero(), Poly::constant(1), Poly::zero()};
  CHECK(is_unit(alg, oj));
  CHECK(make_unit(alg, oj).kappa == 2);
  AlgebraData algb = case_b();
  QuatElem ti{algb.R.parse("T"), Poly::constant(1), Poly::zero(), Poly::zero()};
  CHECK(!is_unit(algb, ti));
  CHECK_THROWS_AS(make_unit(algb, ti), InputError);
}

TEST_CASE("embedding: identity, defining relation, determinant, trace") {
  for (AlgebraData alg : {case_a(), case_b()}) {
    QuadMat one = embed(alg, QuatElem::one());
    CHECK(one.m00 == quad_one(alg.quad_ctx));
    CHECK(one.m01.is_zero());
    CHECK(one.m10.is_zero());
    CHECK(one.m11 == quad_one(alg.quad_ctx));
    QuatElem i{Poly::zero(), Poly::constant(1), Poly::zero(), Poly::zero()};
    QuadMat sq = mat_mul(embed(alg, i), embed(alg, i));
    CHECK(sq.m00 == quad_of_poly(alg.quad_ctx, alg.a_param));
    CHECK(sq.m01.is_zero());
    CHECK(sq.m10.is_zero());
    CHECK(sq.m11 == quad_of_poly(alg.quad_ctx, alg.a_param));

    std::mt19937_64 rng(13);
    for (int it = 0; it < 60; ++it) {
      QuatElem x = rand_elem(rng, alg, 2);
      QuatElem y = rand_elem(rng, alg, 2);
      QuadMat lhs = embed(alg, quat_mul(alg, x, y));
      QuadMat rhs = mat_mul(embed(alg, x), embed(alg, y));
      CHECK(lhs.m00 == rhs.m00);
      CHECK(lhs.m01 == rhs.m01);
      CHECK(lhs.m10 == rhs.m10);
      CHECK(lhs.m11 == rhs.m11);
      QuadElem det = mat_det(embed(alg, x));
      CHECK(det.v.is_zero());
      CHECK(det.u == alg.quad_ctx->field().of_poly(nr(alg, x)));
      QuadElem trace = quad_add(embed(alg, x).m00, embed(alg, x).m11);
      CHECK(trace.v.is_zero());
      CHECK(trace.u == alg.quad_ctx->field().of_poly(tr(alg, x)));
    }
  }
}

TEST_CASE("units form a group") {
  AlgebraData alg = case_a();
  auto seeds = seed_units(alg);
  REQUIRE(!seeds.empty());
  std::mt19937_64 rng(17);
  for (int it = 0; it < 80; ++it) {
    UnitElem u = rand_unit(rng, alg, seeds, 4);
    UnitElem v = rand_unit(rng, alg, seeds, 4);
    CHECK(is_unit(alg, unit_mul(alg, u, v).el));
    UnitElem w = unit_mul(alg, u, unit_inv(alg, u));
    CHECK(is_scalar(w));
    CHECK(w.el == QuatElem::one());
  }
}

TEST_CASE("torsion iff elliptic on random units") {
  AlgebraData alg = case_a();
  auto seeds = seed_units(alg);
  std::mt19937_64 rng(19);
  std::int64_t q = alg.fq().q();
  int torsion_seen = 0, hyperbolic_seen = 0;
  for (int it = 0; it < 150; ++it) {
    UnitElem u = rand_unit(rng, alg, seeds, 3);
    bool torsion = false;
    UnitElem p = u;
    for (std::int64_t k = 1; k <= q * q - 1; ++k) {
      if (is_scalar(p)) { torsion = true; break; }
      p = unit_mul(alg, p, u);
    }
    CHECK(torsion == is_elliptic(alg, u));
    (torsion ? torsion_seen : hyperbolic_seen) += 1;
  }
  CHECK(torsion_seen > 0);
  CHECK(hyperbolic_seen > 0);
}

TEST_CASE("closed-form counts: case A") {
  AlgebraData alg = case_a();
  CHECK(g_of_r(alg.fq(), alg.ram) == Rational(0));
  CHECK(formula_vertex_count(alg) == Rational(2));
  CHECK(formula_gen_bound(alg) == Rational(2));
  CHECK_THROWS_AS(formula_free_rank(alg), InputError);
}

TEST_CASE("closed-form counts: case B") {
  AlgebraData alg = case_b();
  CHECK(g_of_r(alg.fq(), alg.ram) == Rational(3));
  CHECK(formula_vertex_count(alg) == Rational(20));
  CHECK(formula_free_rank(alg) == 21);
  CHECK_THROWS_AS(formula_gen_bound(alg), InputError);
  std::int64_t V = formula_vertex_count(alg).as_integer();
  std::int64_t E = (alg.fq().q() + 1) * V / 2;
  CHECK(formula_free_rank(alg) == E + 1 - V);
}
