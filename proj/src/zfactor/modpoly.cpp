#include "modpoly.hpp"

#include <stdexcept>

namespace pfc::detail {

void trim(MPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer mod(const Integer& v, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse(const Integer& v, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("element is not invertible modulo m");
  return r;
}

MPoly reduce(const IntPoly& p, const Integer& m) {
  MPoly a;
  a.reserve(p.size());
  for (const auto& c : p.coeffs()) a.push_back(mod(c, m));
  trim(a);
  return a;
}

IntPoly lift_symmetric(const MPoly& a, const Integer& m) {
  std::vector<Integer> c;
  c.reserve(a.size());
  const Integer half = m / 2;
  for (const auto& v : a) c.push_back(v > half ? Integer(v - m) : v);
  return IntPoly(std::move(c));
}

IntPoly lift_nonneg(const MPoly& a) { return IntPoly(std::vector<Integer>(a.begin(), a.end())); }

MPoly add(const MPoly& a, const MPoly& b, const Integer& m) {
  MPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    Integer v = (i < a.size() ? a[i] : Integer(0)) + (i < b.size() ? b[i] : Integer(0));
    if (v >= m) v -= m;
    r[i] = v;
  }
  trim(r);
  return r;
}

MPoly sub(const MPoly& a, const MPoly& b, const Integer& m) {
  MPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    Integer v = (i < a.size() ? a[i] : Integer(0)) - (i < b.size() ? b[i] : Integer(0));
    if (v < 0) v += m;
    r[i] = v;
  }
  trim(r);
  return r;
}

MPoly mul(const MPoly& a, const MPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  MPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& v : r) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  trim(r);
  return r;
}

MPoly scale(const MPoly& a, const Integer& s, const Integer& m) {
  MPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i] * s, m);
  trim(r);
  return r;
}

void divrem(const MPoly& a, const MPoly& b, const Integer& m, MPoly& q, MPoly& r) {
  if (b.empty()) throw DivisionByZeroPolynomial();
  r = a;
  if (deg(a) < deg(b)) {
    q.clear();
    return;
  }
  const Integer inv = inverse(b.back(), m);
  const std::size_t bn = b.size();
  q.assign(a.size() - bn + 1, Integer(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer f = mod(r[k + bn - 1] * inv, m);
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < bn; ++j) {
      Integer& v = r[k + j];
      v -= f * b[j];
      mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    }
  }
  r.resize(bn - 1);
  trim(r);
  trim(q);
}

MPoly rem(const MPoly& a, const MPoly& b, const Integer& m) {
  MPoly q, r;
  divrem(a, b, m, q, r);
  return r;
}

MPoly make_monic(const MPoly& a, const Integer& m) {
  if (a.empty()) return a;
  return scale(a, inverse(a.back(), m), m);
}

MPoly gcd(MPoly a, MPoly b, const Integer& m) {
  while (!b.empty()) {
    MPoly r = rem(a, b, m);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, m);
}

void xgcd_unit(const MPoly& a, const MPoly& b, const Integer& m, MPoly& s, MPoly& t) {
  // Invariant: s0*a + t0*b = r0, s1*a + t1*b = r1.
  MPoly r0 = a, r1 = b;
  MPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    MPoly q, r;
    divrem(r0, r1, m, q, r);
    MPoly s2 = sub(s0, mul(q, s1, m), m);
    MPoly t2 = sub(t0, mul(q, t1, m), m);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw std::domain_error("xgcd_unit: inputs are not coprime");
  const Integer inv = inverse(r0[0], m);
  s = scale(s0, inv, m);
  t = scale(t0, inv, m);
}

MPoly powmod(const MPoly& base, const Integer& e, const MPoly& f, const Integer& m) {
  MPoly result{1};
  result = rem(result, f, m);
  MPoly b = rem(base, f, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, m), f, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, m), f, m);
  }
  return result;
}

MPoly derivative(const MPoly& a, const Integer& m) {
  if (a.size() <= 1) return {};
  MPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mod(a[i] * static_cast<unsigned long>(i), m);
  trim(r);
  return r;
}

}  // namespace pfc::detail
