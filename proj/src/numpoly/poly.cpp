#include "pfc/numpoly.hpp"

#include <algorithm>

namespace pfc {

DivRem divrem(const RatPoly& p, const RatPoly& d) {
  if (d.is_zero()) throw DivisionByZeroPolynomial();
  if (p.degree() < d.degree()) return {RatPoly(), p};

  std::vector<Rational> r(p.coeffs().begin(), p.coeffs().end());
  const std::size_t dn = d.size();
  std::vector<Rational> q(r.size() - dn + 1);
  const Rational inv_lead = 1 / d.lead();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational f = r[k + dn - 1] * inv_lead;
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < dn; ++j) r[k + j] -= f * d.coeffs()[j];
  }
  r.resize(dn - 1);
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly rem(const RatPoly& p, const RatPoly& d) { return divrem(p, d).remainder; }

std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& d) {
  if (d.is_zero()) throw DivisionByZeroPolynomial();
  if (p.is_zero()) return IntPoly();
  if (p.degree() < d.degree()) return std::nullopt;

  std::vector<Integer> r(p.coeffs().begin(), p.coeffs().end());
  const std::size_t dn = d.size();
  std::vector<Integer> q(r.size() - dn + 1);
  const Integer& lead = d.lead();
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer& top = r[k + dn - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    Integer f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    q[k] = f;
    for (std::size_t j = 0; j < dn; ++j) r[k + j] -= f * d.coeffs()[j];
  }
  for (std::size_t j = 0; j + 1 < dn; ++j)
    if (r[j] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * Rational(1 / a.lead());
}

template <typename T>
static Poly<T> derivative_impl(const Poly<T>& p) {
  if (p.degree() <= 0) return Poly<T>();
  std::vector<T> c(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) c[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
  return Poly<T>(std::move(c));
}

RatPoly derivative(const RatPoly& p) { return derivative_impl(p); }
IntPoly derivative(const IntPoly& p) { return derivative_impl(p); }

template <typename T>
static Poly<T> compose_impl(const Poly<T>& outer, const Poly<T>& inner) {
  Poly<T> acc;
  for (std::size_t i = outer.size(); i-- > 0;) {
    acc = acc * inner;
    acc += Poly<T>::constant(outer.coeffs()[i]);
  }
  return acc;
}

RatPoly compose(const RatPoly& outer, const RatPoly& inner) { return compose_impl(outer, inner); }
IntPoly compose(const IntPoly& outer, const IntPoly& inner) { return compose_impl(outer, inner); }

Rational evaluate(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p.coeffs()[i];
  return acc;
}

Integer evaluate(const IntPoly& p, const Integer& x) {
  Integer acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p.coeffs()[i];
  return acc;
}

Integer evaluate_mod(const IntPoly& p, const Integer& x, const Integer& m) {
  if (m < 2) throw std::invalid_argument("evaluate_mod: modulus must be at least 2");
  Integer xr, acc = 0, c;
  mpz_fdiv_r(xr.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * xr + p.coeffs()[i];
    mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("primitive part of the zero polynomial");
  Integer g = content(p);
  if (p.lead() < 0) g = -g;
  std::vector<Integer> c(p.coeffs().begin(), p.coeffs().end());
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

Integer denominator_lcm(const RatPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

ContentPrimitive content_primitive(const RatPoly& p) {
  if (p.is_zero()) throw std::domain_error("content of the zero polynomial");
  const Integer l = denominator_lcm(p);
  std::vector<Integer> scaled;
  scaled.reserve(p.size());
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (l / c.get_den());
    scaled.push_back(v);
  }
  IntPoly s(std::move(scaled));
  Integer g = content(s);
  if (s.lead() < 0) g = -g;
  Rational cont(g, l);
  cont.canonicalize();
  return {cont, primitive_part(s)};
}

RatPoly to_rat(const IntPoly& p) {
  std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
  return RatPoly(std::move(c));
}

std::optional<IntPoly> to_int(const RatPoly& p) {
  std::vector<Integer> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) {
    if (v.get_den() != 1) return std::nullopt;
    c.push_back(v.get_num());
  }
  return IntPoly(std::move(c));
}

}  // namespace pfc
