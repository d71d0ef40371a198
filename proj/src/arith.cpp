#include "btq/arith.hpp"

namespace btq {

std::int64_t fq_nonsquare(const FqConfig& fq) { return fq.nonsquare(); }

namespace {

// q^d as int64 with overflow guard; degrees here are desk scale.
std::int64_t qpow(std::int64_t q, int d) {
  std::int64_t r = 1;
  for (int i = 0; i < d; ++i) {
    BTQ_CHECK(r <= (std::int64_t{1} << 56) / q, "q^deg too large");
    r *= q;
  }
  return r;
}

}  // namespace

int legendre(const PolyRing& R, const Poly& a, const Poly& f) {
  if (!f.is_monic() || f.is_constant() || !is_irreducible(R, f))
    throw InputError("legendre: modulus must be monic irreducible");
  Poly am = R.mod(a, f);
  if (am.is_zero()) return 0;
  std::int64_t e = (qpow(R.fq.q(), f.deg_nonzero()) - 1) / 2;
  Poly p = R.powmod(am, e, f);
  if (p == Poly::constant(1)) return 1;
  if (p == Poly::constant(R.fq.q() - 1)) return -1;
  throw InternalError("legendre: residue power is not +-1");
}

bool reciprocity_check(const PolyRing& R, const Poly& a, const Poly& f) {
  if (!a.is_monic() || !f.is_monic() || a.is_constant() || f.is_constant() ||
      !is_irreducible(R, a) || !is_irreducible(R, f) ||
      !R.gcd(a, f).is_constant())
    throw InputError("reciprocity_check: need coprime monic irreducibles");
  int lhs = legendre(R, f, a);
  int sign =
      (((R.fq.q() - 1) / 2) % 2 != 0 && a.deg_nonzero() % 2 != 0 &&
       f.deg_nonzero() % 2 != 0)
          ? -1
          : 1;
  int rhs = sign * legendre(R, a, f);
  return lhs == rhs;
}

bool is_irreducible(const PolyRing& R, const Poly& f) {
  if (f.is_zero()) throw InputError("is_irreducible: zero polynomial");
  if (f.is_constant()) return false;
  int d = f.deg_nonzero();
  if (d == 1) return true;
  // x^{q^i} mod f, starting from x = T.
  Poly x = R.mod(Poly::monomial(1, 1), f);
  Poly t = x;
  for (int i = 1; i <= d / 2; ++i) {
    x = R.powmod(x, R.fq.q(), f);
    Poly g = R.gcd(R.sub(x, t), f);
    if (!g.is_constant()) return false;
  }
  return true;
}

Poly crt(const PolyRing& R, const std::vector<Poly>& residues,
         const std::vector<Poly>& moduli) {
  if (residues.size() != moduli.size() || moduli.empty())
    throw InputError("crt: mismatched or empty inputs");
  for (std::size_t i = 0; i < moduli.size(); ++i)
    for (std::size_t j = i + 1; j < moduli.size(); ++j)
      if (!R.gcd(moduli[i], moduli[j]).is_constant())
        throw InputError("crt: moduli not pairwise coprime");
  Poly x = R.mod(residues[0], moduli[0]);
  Poly m = moduli[0];
  for (std::size_t i = 1; i < moduli.size(); ++i) {
    // x + m * t with t chosen so the next congruence holds.
    Poly diff = R.mod(R.sub(residues[i], x), moduli[i]);
    Poly t = R.mod(R.mul(diff, R.invmod(m, moduli[i])), moduli[i]);
    x = R.add(x, R.mul(m, t));
    m = R.mul(m, moduli[i]);
    x = R.mod(x, m);
  }
  return x;
}

std::vector<Poly> support(const PolyRing& R, const Poly& a) {
  if (a.is_zero()) throw InputError("support of zero polynomial");
  std::vector<Poly> out;
  Poly rest = R.monic(a);
  int d = 1;
  while (!rest.is_constant()) {
    if (d > rest.deg_nonzero() / 2) {
      out.push_back(rest);  // what is left is irreducible
      break;
    }
    // monic polynomials of degree d, in index order
    std::uint64_t qd = 1;
    for (int i = 0; i < d; ++i) qd *= static_cast<std::uint64_t>(R.fq.q());
    bool found = false;
    for (std::uint64_t n = qd; n < 2 * qd; ++n) {
      Poly f = R.from_index(n);
      if (!R.mod(rest, f).is_zero()) continue;
      out.push_back(f);
      do { rest = R.divmod(rest, f).first; } while (R.mod(rest, f).is_zero());
      found = true;
      break;
    }
    if (!found) ++d;
  }
  return out;
}

}  // namespace btq
