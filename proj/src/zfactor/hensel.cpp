#include "modpoly.hpp"

#include <algorithm>

namespace pfc::detail {

namespace {

MPoly reduce_mod(const MPoly& a, const Integer& m) {
  MPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i], m);
  trim(r);
  return r;
}

MPoly product(const std::vector<MPoly>& fs, std::size_t lo, std::size_t hi, const Integer& m) {
  MPoly r{1};
  for (std::size_t i = lo; i < hi; ++i) r = mul(r, fs[i], m);
  return r;
}

// One quadratic step: f = g*h mod m, s*g + t*h = 1 mod m, h monic.
// Produces the same relations modulo m2, where m2 divides m^2.
void hensel_step(const MPoly& f, MPoly& g, MPoly& h, MPoly& s, MPoly& t, const Integer& m2) {
  const MPoly e = sub(reduce_mod(f, m2), mul(g, h, m2), m2);
  MPoly q, r;
  divrem(mul(s, e, m2), h, m2, q, r);
  MPoly g2 = add(add(g, mul(t, e, m2), m2), mul(q, g, m2), m2);
  MPoly h2 = add(h, r, m2);

  const MPoly b = sub(add(mul(s, g2, m2), mul(t, h2, m2), m2), MPoly{1}, m2);
  MPoly c, d;
  divrem(mul(s, b, m2), h2, m2, c, d);
  s = sub(s, d, m2);
  t = sub(sub(t, mul(t, b, m2), m2), mul(c, g2, m2), m2);
  g = std::move(g2);
  h = std::move(h2);
}

void lift_node(const MPoly& F, const std::vector<MPoly>& fs, std::size_t lo, std::size_t hi,
               const Integer& p, unsigned k, std::vector<MPoly>& out) {
  Integer pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
  if (hi - lo == 1) {
    out.push_back(make_monic(F, pk));
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  const Integer lc = mod(F.back(), p);
  MPoly g = scale(product(fs, lo, mid, p), lc, p);
  MPoly h = product(fs, mid, hi, p);
  MPoly s, t;
  xgcd_unit(g, h, p, s, t);

  for (unsigned e = 1; e < k;) {
    unsigned e2 = std::min(2 * e, k);
    Integer m2;
    mpz_pow_ui(m2.get_mpz_t(), p.get_mpz_t(), e2);
    hensel_step(F, g, h, s, t, m2);
    e = e2;
  }
  lift_node(g, fs, lo, mid, p, k, out);
  lift_node(h, fs, mid, hi, p, k, out);
}

}  // namespace

std::vector<MPoly> hensel_lift(const IntPoly& f, const std::vector<MPoly>& factors, const Integer& p,
                               unsigned k) {
  if (factors.empty()) return {};
  Integer pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
  std::vector<MPoly> out;
  lift_node(reduce(f, pk), factors, 0, factors.size(), p, k, out);
  return out;
}

}  // namespace pfc::detail
