#pragma once

// Concrete curves Y^2 = X^3 + aX over F_q from a family: sieving, prime
// search, quartic twist selection and verification.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pfc/family.hpp"
#include "pfc/numpoly.hpp"

namespace pfc {

inline constexpr unsigned kDefaultMrRounds = 64;
inline constexpr std::uint64_t kDefaultSeed = 0x70616972ULL;

/// Deterministic Miller-Rabin (bases 2..37) below 2^64, otherwise `rounds`
/// random bases drawn from a PRNG seeded with `seed`.
bool is_prime(const Integer& n, unsigned rounds = kDefaultMrRounds, std::uint64_t seed = kDefaultSeed);

unsigned hamming_weight(const Integer& n);

/// lg n for n > 0, accurate to double precision.
double lg(const Integer& n);

// ---- sieve ---------------------------------------------------------------

struct SieveSpec {
  Integer modulus = 1;
  std::vector<Integer> residues;  // sorted, in [0, modulus)
  bool admits(const Integer& x) const;
};

/// Residues x mod (D * prod p), D the denominator lcm of t, r, q, y, where
/// t, r, q, y are integral and no p divides q(x) r(x).
SieveSpec sieve_residues(const FamilyCandidate& family, const std::vector<unsigned>& small_primes);

// ---- field and curve arithmetic -----------------------------------------

class NonInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Point {
  Integer x, y;
  bool infinity = true;
  static Point at_infinity() { return {}; }
  static Point affine(Integer x, Integer y) { return {std::move(x), std::move(y), false}; }
  friend bool operator==(const Point&, const Point&) = default;
};

/// Y^2 = X^3 + aX over F_q.
struct Curve {
  Integer q, a;

  Integer inv(const Integer& v) const;  // throws NonInvertible
  bool on_curve(const Point& p) const;
  Point neg(const Point& p) const;
  Point add(const Point& p, const Point& r) const;
  Point dbl(const Point& p) const;
  Point mul(const Integer& k, const Point& p) const;  // k >= 0
  /// Uniform random affine point with y != 0. Requires a PRNG state.
  Point random_point(gmp_randclass& rng) const;
};

/// Square root modulo an odd prime (Tonelli-Shanks); nullopt for non-residues.
std::optional<Integer> sqrt_mod(const Integer& v, const Integer& q);

// ---- twist selection -----------------------------------------------------

class NoTwistFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exclusive order test: true iff `points` random points P each satisfy
/// [q+1-t]P = O while [q+1+t]P, [q+1-y]P, [q+1+y]P are all nonzero. Points
/// annihilated by the target and by another order are resampled.
bool twist_order_test(const Integer& q, const Integer& a, const Integer& t, const Integer& y, gmp_randclass& rng,
                      unsigned points = 2);

/// a in {1, g, g^2, g^3} (g the smallest quadratic non-residue) whose curve
/// has order q + 1 - t. Throws NoTwistFound.
Integer cm_curve(const Integer& q, const Integer& t, const Integer& y, std::uint64_t seed = kDefaultSeed);

// ---- instances -----------------------------------------------------------

struct CurveInstance {
  Integer x0, q, r, t, y, a, order;
  double rho_e = 0;
  unsigned hw_t = 0, hw_r = 0;
};

/// Fills order, rho_e and Hamming weights from x0, q, r, t, y, a.
void complete(CurveInstance& inst);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  bool informational = false;  // reported, never fails the transcript
};

struct Transcript {
  std::vector<Check> checks;
  bool ok() const;
  const Check* find(const std::string& name) const;
};

Transcript verify_curve(const CurveInstance& inst, unsigned mr_rounds = kDefaultMrRounds,
                        std::uint64_t seed = kDefaultSeed);

class SearchBudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchOptions {
  unsigned mr_rounds = kDefaultMrRounds;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t budget = 1000000;  // candidate x values examined
  unsigned jobs = 1;
  std::vector<unsigned> sieve_primes{2, 3, 5, 7, 11, 13};
};

/// First x beyond `start` (inclusive) in `direction` (+1 or -1) with r(x) and
/// q(x) prime, then its curve. Small |x| bypass the sieve.
CurveInstance next_instance(const FamilyCandidate& family, const Integer& start, int direction,
                            const SearchOptions& opts = {});

/// Smallest |x| in `direction` with r(x) >= 2^bits.
Integer start_for_bits(const FamilyCandidate& family, unsigned bits, int direction);

}  // namespace pfc
