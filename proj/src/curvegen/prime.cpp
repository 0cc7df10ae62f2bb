#include <array>
#include <cmath>

#include "pfc/curvegen.hpp"

namespace pfc {

namespace {

constexpr std::array<unsigned, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// True when a does not witness compositeness of n = 1 + d * 2^s.
bool strong_probable_prime(const Integer& n, const Integer& a, const Integer& d, unsigned long s) {
  const Integer nm1 = n - 1;
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == nm1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

bool is_prime(const Integer& n, unsigned rounds, std::uint64_t seed) {
  if (n < 2) return false;
  for (unsigned p : kWitnesses) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Integer d = n - 1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    for (unsigned p : kWitnesses)
      if (!strong_probable_prime(n, Integer(p), d, s)) return false;
    return true;
  }
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(static_cast<unsigned long>(seed));
  const Integer span = n - 3;  // bases in [2, n - 2]
  for (unsigned i = 0; i < rounds; ++i) {
    const Integer a = rng.get_z_range(span) + 2;
    if (!strong_probable_prime(n, a, d, s)) return false;
  }
  return true;
}

unsigned hamming_weight(const Integer& n) {
  const Integer m = abs(n);
  return static_cast<unsigned>(mpz_popcount(m.get_mpz_t()));
}

double lg(const Integer& n) {
  long e = 0;
  const double mant = mpz_get_d_2exp(&e, n.get_mpz_t());
  return static_cast<double>(e) + std::log2(mant);
}

}  // namespace pfc
