#include <algorithm>

#include "modpoly.hpp"
#include "pfc/zfactor.hpp"

namespace pfc {

namespace {

using detail::MPoly;

bool mpoly_less(const MPoly& a, const MPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

MPoly random_below(std::size_t n, const Integer& p, gmp_randclass& rng) {
  MPoly a(n);
  for (auto& v : a) v = rng.get_z_range(p);
  detail::trim(a);
  return a;
}

// f monic squarefree, product of irreducibles of degree d.
void equal_degree_split(const MPoly& f, int d, const Integer& p, gmp_randclass& rng,
                        std::vector<MPoly>& out) {
  const int n = detail::deg(f);
  if (n == d) {
    out.push_back(f);
    return;
  }
  Integer pd;
  mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
  const Integer e = (pd - 1) / 2;
  for (;;) {
    MPoly a = random_below(static_cast<std::size_t>(n), p, rng);
    if (detail::deg(a) < 1) continue;
    MPoly g = detail::gcd(a, f, p);
    if (detail::deg(g) <= 0) {
      MPoly b = detail::powmod(a, e, f, p);
      b = detail::sub(b, MPoly{1}, p);
      g = detail::gcd(b, f, p);
    }
    const int dg = detail::deg(g);
    if (dg > 0 && dg < n) {
      MPoly q, r;
      detail::divrem(f, g, p, q, r);
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(q, d, p, rng, out);
      return;
    }
  }
}

}  // namespace

namespace detail {

std::vector<MPoly> factor_mod_prime(const MPoly& monic_f, const Integer& p, std::uint64_t seed) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(static_cast<unsigned long>(seed));

  std::vector<MPoly> out;
  MPoly f = monic_f;
  const MPoly x{0, 1};
  MPoly h = rem(x, f, p);
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = powmod(h, p, f, p);
    MPoly g = gcd(sub(h, x, p), f, p);
    if (deg(g) > 0) {
      equal_degree_split(g, d, p, rng, out);
      MPoly q, r;
      divrem(f, g, p, q, r);
      f = q;
      h = rem(h, f, p);
    }
  }
  if (deg(f) > 0) out.push_back(f);
  std::sort(out.begin(), out.end(), mpoly_less);
  return out;
}

}  // namespace detail

std::vector<IntPoly> factor_mod_p(const IntPoly& p, const Integer& prime, std::uint64_t seed) {
  if (prime < 3) throw std::invalid_argument("factor_mod_p: odd prime required");
  if (p.degree() < 1) throw std::invalid_argument("factor_mod_p: non-constant polynomial required");
  MPoly f = detail::reduce(p, prime);
  if (detail::deg(f) != p.degree()) throw BadPrime("prime divides the leading coefficient");
  f = detail::make_monic(f, prime);
  MPoly g = detail::gcd(f, detail::derivative(f, prime), prime);
  if (detail::deg(g) > 0) throw BadPrime("image is not squarefree");

  std::vector<IntPoly> out;
  for (const auto& fac : detail::factor_mod_prime(f, prime, seed)) out.push_back(detail::lift_nonneg(fac));
  return out;
}

}  // namespace pfc
