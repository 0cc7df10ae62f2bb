#pragma once

// Families (t, r, q) with embedding degree 8 and CM discriminant 1 built from
// cubics u with u(omega) = zeta_8, plus the scan driver over a box of omega.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfc/cyclo8.hpp"
#include "pfc/numpoly.hpp"

namespace pfc {

inline constexpr unsigned kEmbeddingDegree = 8;
inline constexpr unsigned kDiscriminant = 1;
inline constexpr std::array<unsigned, 4> kExponents{1, 3, 5, 7};

/// t = u^m + 1 mod r. Throws std::invalid_argument if m is not odd in [1, 7]
/// or r does not divide Phi_8(u).
RatPoly compute_t(const RatPoly& u, const IntPoly& r, unsigned m);
/// y = (2 - t)(t - 1)^2 mod r.
RatPoly compute_y(const RatPoly& t, const IntPoly& r);
/// q = (t^2 + y^2) / 4.
RatPoly compute_q(const RatPoly& t, const RatPoly& y);

/// deg q / deg r.
Rational rho_of_family(const RatPoly& t, const RatPoly& r, const RatPoly& q);

/// Outcome of the four "represents primes" conditions. The last two are
/// decided over finite windows, see represents_primes.
struct PrimeRepresentation {
  bool irreducible = false;
  bool positive_lead = false;
  bool integral_somewhere = false;
  bool coprime_values = false;
  Integer integrality_modulus = 1;      // lcm of coefficient denominators
  std::vector<Integer> integral_classes;  // x mod the modulus with f(x) in Z
  Integer value_gcd = 0;                // gcd of the integral values seen

  bool ok() const { return irreducible && positive_lead && integral_somewhere && coprime_values; }
  std::string diagnosis() const;
};

inline constexpr unsigned kValueWindow = 10000;

/// Integrality is tested on a full residue system modulo the denominator lcm;
/// the gcd runs over x in [0, window) with f(x) integral and stops at 1.
PrimeRepresentation represents_primes(const RatPoly& f, unsigned window = kValueWindow);

struct FamilyReport {
  bool q_power_represents_primes = false;  // q = p^d, p represents primes
  unsigned q_exponent = 0;
  bool r_represents_primes = false;  // r = c * r~, r~ represents primes
  Integer r_cofactor = 0;
  bool r_divides_q_plus_1_minus_t = false;
  bool r_divides_phi8_t_minus_1 = false;
  bool cm_identity = false;  // 4q - t^2 = y^2

  bool ok() const {
    return q_power_represents_primes && r_represents_primes && r_divides_q_plus_1_minus_t &&
           r_divides_phi8_t_minus_1 && cm_identity;
  }
};

FamilyReport verify_family(const RatPoly& t, const IntPoly& r, const RatPoly& q, const RatPoly& y);

/// u_norm(x) = sign * u(scale * x + shift).
struct NormalizationMap {
  Rational scale = 1;
  Rational shift = 0;
  int sign = 1;
  friend bool operator==(const NormalizationMap&, const NormalizationMap&) = default;
};

/// f(scale * x + shift); the sign is not applied.
RatPoly transport(const RatPoly& f, const NormalizationMap& map);

struct NormalizedCubic {
  IntPoly u;
  NormalizationMap map;
};

inline constexpr unsigned kMaxNormalizationScale = 4096;

/// Every integral reparametrization u(A x + b) with the smallest positive
/// integer A, one per admissible class b mod A, each reduced to its canonical
/// form under x -> +-x + c and u -> +-u. Sorted canonically. Empty when no
/// A <= max_scale works.
std::vector<NormalizedCubic> normalize_all(const RatPoly& u, unsigned max_scale = kMaxNormalizationScale);

/// First entry of normalize_all. Throws std::domain_error when there is none.
NormalizedCubic normalize(const RatPoly& u, unsigned max_scale = kMaxNormalizationScale);

/// Canonical form of an integral cubic under x -> +-x + c (c in Z) and u -> +-u:
/// smallest max |coef|, then fewest negative coefficients, then lexicographic
/// from the leading coefficient. `map` receives the substitution used.
IntPoly canonical_cubic(const IntPoly& u, NormalizationMap* map = nullptr);

/// Total order used for sorting cubics and families.
bool canonical_less(const IntPoly& a, const IntPoly& b);

struct FamilyCandidate {
  std::optional<Zeta8Element> omega;
  std::optional<NormalizationMap> map;  // from the raw cubic of omega to u
  RatPoly u;
  IntPoly r;
  unsigned m = 1;
  RatPoly t, y, q;
  Rational rho;
  PrimeRepresentation r_status, q_status;
  FamilyReport report;

  /// Step 7: both q and r represent primes.
  bool accepted() const { return r_status.ok() && q_status.ok(); }
  std::string reason() const;
};

/// One candidate for a given factor r of Phi_8(u) and exponent m, with
/// statuses and the verification report filled in.
FamilyCandidate make_family(const RatPoly& u, const IntPoly& r, unsigned m);

/// All (r, m) with deg r in {4, 8}, quartic factors first. Only accepted
/// candidates unless `diagnostic`.
std::vector<FamilyCandidate> build_families(const RatPoly& u, bool diagnostic = false);

/// solve_u, normalize_all, then build_families on every normalized class.
/// Propagates SingularSystem / DegenerateCubic.
std::vector<FamilyCandidate> build_families(const Zeta8Element& omega, bool diagnostic = false);

struct ScanBox {
  std::array<std::int64_t, 4> lo{0, 0, 0, 0};
  std::array<std::int64_t, 4> hi{0, 0, 0, 0};  // inclusive
  unsigned max_lc_bits = 10;  // drop families with lg lc(u) >= this
  bool valid() const;
  std::uint64_t size() const;
};

struct ScanCounters {
  std::uint64_t omegas = 0;
  std::uint64_t singular = 0;          // d = 0
  std::uint64_t degenerate = 0;        // n3 = 0
  std::uint64_t not_normalizable = 0;  // no integral reparametrization found
  std::uint64_t lc_filtered = 0;       // normalized lc too large
  std::uint64_t distinct_cubics = 0;
  std::uint64_t no_usable_factor = 0;  // no factor of degree 4 or 8
  std::uint64_t rejected_pairs = 0;    // (r, m) pairs failing represents_primes
  std::uint64_t dagger = 0;            // cubics with usable r but no accepted pair
  std::uint64_t duplicate_families = 0;
};

struct ScanResult {
  std::vector<FamilyCandidate> families;
  ScanCounters counters;
};

/// Deterministic for a given box regardless of `jobs`.
ScanResult scan(const ScanBox& box, unsigned jobs = 1);

}  // namespace pfc
