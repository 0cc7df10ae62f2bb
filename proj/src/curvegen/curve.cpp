#include "pfc/curvegen.hpp"

namespace pfc {

namespace {

Integer modq(const Integer& v, const Integer& q) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
  return r;
}

Integer powm(const Integer& b, const Integer& e, const Integer& m) {
  Integer r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

std::optional<Integer> sqrt_mod(const Integer& v0, const Integer& q) {
  const Integer v = modq(v0, q);
  if (v == 0) return Integer(0);
  if (powm(v, (q - 1) / 2, q) != 1) return std::nullopt;
  if (mpz_tstbit(q.get_mpz_t(), 1)) return powm(v, (q + 1) / 4, q);  // q = 3 mod 4

  // Tonelli-Shanks.
  Integer Q = q - 1;
  const unsigned long S = mpz_scan1(Q.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(Q.get_mpz_t(), Q.get_mpz_t(), S);
  Integer z = 2;
  while (powm(z, (q - 1) / 2, q) != q - 1)
    if (++z > 1000000) throw std::domain_error("sqrt_mod: no non-residue found, q not prime");

  unsigned long M = S;
  Integer c = powm(z, Q, q);
  Integer t = powm(v, Q, q);
  Integer R = powm(v, (Q + 1) / 2, q);
  while (t != 1) {
    unsigned long i = 0;
    Integer tt = t;
    while (tt != 1) {
      tt = tt * tt % q;
      if (++i >= M) throw std::domain_error("sqrt_mod: q not prime");
    }
    Integer b = c;
    for (unsigned long j = 0; j + i + 1 < M; ++j) b = b * b % q;
    M = i;
    c = b * b % q;
    t = t * c % q;
    R = R * b % q;
  }
  return R;
}

Integer Curve::inv(const Integer& v) const {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t()) == 0) throw NonInvertible("element not invertible mod q");
  return r;
}

bool Curve::on_curve(const Point& p) const {
  if (p.infinity) return true;
  return modq(p.y * p.y - (p.x * p.x * p.x + a * p.x), q) == 0;
}

Point Curve::neg(const Point& p) const {
  if (p.infinity) return p;
  return Point::affine(p.x, modq(-p.y, q));
}

Point Curve::dbl(const Point& p) const {
  if (p.infinity || p.y == 0) return Point::at_infinity();
  const Integer l = modq((3 * p.x * p.x + a) * inv(2 * p.y), q);
  const Integer x3 = modq(l * l - 2 * p.x, q);
  return Point::affine(x3, modq(l * (p.x - x3) - p.y, q));
}

Point Curve::add(const Point& p, const Point& r) const {
  if (p.infinity) return r;
  if (r.infinity) return p;
  if (p.x == r.x) {
    if (modq(p.y + r.y, q) == 0) return Point::at_infinity();
    return dbl(p);
  }
  const Integer l = modq((r.y - p.y) * inv(r.x - p.x), q);
  const Integer x3 = modq(l * l - p.x - r.x, q);
  return Point::affine(x3, modq(l * (p.x - x3) - p.y, q));
}

Point Curve::mul(const Integer& k, const Point& p) const {
  Point acc = Point::at_infinity();
  if (k <= 0 || p.infinity) return acc;
  for (std::size_t i = mpz_sizeinbase(k.get_mpz_t(), 2); i-- > 0;) {
    acc = dbl(acc);
    if (mpz_tstbit(k.get_mpz_t(), i)) acc = add(acc, p);
  }
  return acc;
}

Point Curve::random_point(gmp_randclass& rng) const {
  for (;;) {
    const Integer x = rng.get_z_range(q);
    const Integer rhs = modq(x * x * x + a * x, q);
    if (rhs == 0) continue;
    if (auto y = sqrt_mod(rhs, q)) return Point::affine(x, *y);
  }
}

bool twist_order_test(const Integer& q, const Integer& a, const Integer& t, const Integer& y, gmp_randclass& rng,
                      unsigned points) {
  if (modq(a, q) == 0) return false;
  const Curve E{q, modq(a, q)};
  const Integer target = q + 1 - t;
  const Integer others[3] = {q + 1 + t, q + 1 - y, q + 1 + y};
  for (const auto& o : others)
    if (o == target) return false;

  unsigned confirmed = 0;
  for (unsigned tries = 0; confirmed < points && tries < 64 * points; ++tries) {
    const Point P = E.random_point(rng);
    if (!E.mul(target, P).infinity) return false;
    bool ambiguous = false;
    for (const auto& o : others) ambiguous = ambiguous || E.mul(o, P).infinity;
    if (!ambiguous) ++confirmed;
  }
  return confirmed == points;
}

Integer cm_curve(const Integer& q, const Integer& t, const Integer& y, std::uint64_t seed) {
  if (4 * q != t * t + y * y) throw NoTwistFound("cm_curve: 4q != t^2 + y^2");
  if (q < 5 || mpz_fdiv_ui(q.get_mpz_t(), 4) != 1) throw NoTwistFound("cm_curve: q must be 1 mod 4");
  Integer g = 2;
  while (powm(g, (q - 1) / 2, q) != q - 1)
    if (++g > 1000000) throw NoTwistFound("cm_curve: no quadratic non-residue found");

  gmp_randclass rng(gmp_randinit_default);
  rng.seed(static_cast<unsigned long>(seed));
  Integer a = 1;
  for (int k = 0; k < 4; ++k) {
    if (twist_order_test(q, a, t, y, rng)) return a;
    a = a * g % q;
  }
  throw NoTwistFound("cm_curve: no quartic twist has order q + 1 - t");
}

}  // namespace pfc
