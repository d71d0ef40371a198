#pragma once

#include <vector>

#include "btq/poly.hpp"

namespace btq {

// Least nonsquare of F_q; deterministic so runs are reproducible.
std::int64_t fq_nonsquare(const FqConfig& fq);

// Legendre symbol (a/f) for f monic irreducible: 0 if f | a, otherwise
// a^((q^deg f - 1)/2) mod f mapped to +-1.
int legendre(const PolyRing& R, const Poly& a, const Poly& f);

// Checks the reciprocity identity
//   (f/a) = (-1)^{((q-1)/2) deg(a) deg(f)} (a/f)
// for monic irreducible coprime a, f. Always true; used as a cross-check of
// the Legendre implementation.
bool reciprocity_check(const PolyRing& R, const Poly& a, const Poly& f);

// Irreducibility over F_q via gcd(T^{q^i} - T mod f, f) = 1 for i <= deg/2.
bool is_irreducible(const PolyRing& R, const Poly& f);

// Chinese remainder theorem for pairwise coprime moduli; the result has
// degree < deg of the product.
Poly crt(const PolyRing& R, const std::vector<Poly>& residues,
         const std::vector<Poly>& moduli);

// Monic irreducible divisors of a nonzero polynomial, by trial division in
// index order. Desk-scale degrees only.
std::vector<Poly> support(const PolyRing& R, const Poly& a);

}  // namespace btq
