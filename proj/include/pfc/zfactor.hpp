#pragma once

// Factorization of univariate integer polynomials over Q (Zassenhaus:
// modular factorization, quadratic Hensel lifting, subset recombination)
// and cyclotomic polynomials.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pfc/numpoly.hpp"

namespace pfc {

struct FactorPower {
  IntPoly factor;
  unsigned multiplicity = 1;
  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// unit * prod(factor^multiplicity) equals the input exactly. Factors are
/// primitive, irreducible over Q, have positive leading coefficient, and are
/// sorted by degree then coefficients (leading first).
struct Factorization {
  Rational unit;
  std::vector<FactorPower> factors;
};

/// Thrown by factor_mod_p when the prime divides the leading coefficient or
/// the image is not squarefree. Callers move on to the next prime.
class BadPrime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Phi_k for 1 <= k <= 64.
IntPoly cyclotomic(unsigned k);

/// Yun decomposition: primitive squarefree parts with multiplicities, parts
/// of degree 0 omitted. The product reconstructs p up to a rational unit.
std::vector<FactorPower> squarefree_decompose(const IntPoly& p);

/// Monic irreducible factors of p modulo `prime`, coefficients in [0, prime),
/// sorted. `seed` drives equal-degree splitting.
std::vector<IntPoly> factor_mod_p(const IntPoly& p, const Integer& prime,
                                  std::uint64_t seed = 0x5eedf00dULL);

Factorization factor_over_Z(const IntPoly& p);
Factorization factor_over_Q(const RatPoly& p);

/// Non-constant and irreducible over Q.
bool is_irreducible(const IntPoly& p);
bool is_irreducible(const RatPoly& p);

/// Product unit * prod(factor^e) as a rational polynomial.
RatPoly expand(const Factorization& f);

}  // namespace pfc
