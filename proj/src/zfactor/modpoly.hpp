#pragma once

// Dense polynomials over Z/mZ used by the modular factorization and Hensel
// lifting. Coefficients are kept in [0, m) and trimmed.

#include <cstdint>
#include <vector>

#include "pfc/numpoly.hpp"

namespace pfc::detail {

using MPoly = std::vector<Integer>;

inline int deg(const MPoly& a) { return a.empty() ? kZeroDegree : static_cast<int>(a.size()) - 1; }

void trim(MPoly& a);
Integer mod(const Integer& v, const Integer& m);
Integer inverse(const Integer& v, const Integer& m);

MPoly reduce(const IntPoly& p, const Integer& m);
IntPoly lift_symmetric(const MPoly& a, const Integer& m);
IntPoly lift_nonneg(const MPoly& a);

MPoly add(const MPoly& a, const MPoly& b, const Integer& m);
MPoly sub(const MPoly& a, const MPoly& b, const Integer& m);
MPoly mul(const MPoly& a, const MPoly& b, const Integer& m);
MPoly scale(const MPoly& a, const Integer& s, const Integer& m);

/// Requires the leading coefficient of b to be a unit mod m.
void divrem(const MPoly& a, const MPoly& b, const Integer& m, MPoly& q, MPoly& r);
MPoly rem(const MPoly& a, const MPoly& b, const Integer& m);
MPoly make_monic(const MPoly& a, const Integer& m);

/// Monic gcd; m must be prime.
MPoly gcd(MPoly a, MPoly b, const Integer& m);
/// s*a + t*b = 1 mod m for coprime a, b (m prime); deg s < deg b, deg t < deg a.
void xgcd_unit(const MPoly& a, const MPoly& b, const Integer& m, MPoly& s, MPoly& t);

MPoly powmod(const MPoly& base, const Integer& e, const MPoly& f, const Integer& m);
MPoly derivative(const MPoly& a, const Integer& m);

/// Monic irreducible factors of a monic squarefree f modulo the odd prime p.
std::vector<MPoly> factor_mod_prime(const MPoly& monic_f, const Integer& p, std::uint64_t seed);

/// Lifts monic factors of f/lc(f) mod p to monic factors mod p^k.
std::vector<MPoly> hensel_lift(const IntPoly& f, const std::vector<MPoly>& factors, const Integer& p,
                               unsigned k);

}  // namespace pfc::detail
