#include <stdexcept>

#include "pfc/family.hpp"
#include "pfc/zfactor.hpp"

namespace pfc {

namespace {

const RatPoly& phi8() {
  static const RatPoly p = to_rat(cyclotomic(kEmbeddingDegree));
  return p;
}

RatPoly powmod(const RatPoly& base, unsigned e, const RatPoly& mod) {
  RatPoly r = RatPoly::constant(1), b = rem(base, mod);
  for (; e; e >>= 1) {
    if (e & 1) r = rem(r * b, mod);
    b = rem(b * b, mod);
  }
  return rem(r, mod);
}

bool divides(const RatPoly& d, const RatPoly& p) { return rem(p, d).is_zero(); }

// Exact e-th root of a rational, if any.
std::optional<Rational> rational_root(const Rational& v, unsigned e) {
  if (v < 0 && e % 2 == 0) return std::nullopt;
  Integer num = abs(v.get_num()), den = v.get_den(), rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), e)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), e)) return std::nullopt;
  Rational r(rn, rd);
  r.canonicalize();
  return v < 0 ? Rational(-r) : r;
}

}  // namespace

RatPoly compute_t(const RatPoly& u, const IntPoly& r, unsigned m) {
  if (m > 7 || m % 2 == 0) throw std::invalid_argument("compute_t: m must be one of 1, 3, 5, 7");
  const RatPoly rr = to_rat(r);
  if (!divides(rr, compose(phi8(), u))) throw std::invalid_argument("compute_t: r does not divide Phi_8(u)");
  return rem(powmod(u, m, rr) + RatPoly::constant(1), rr);
}

RatPoly compute_y(const RatPoly& t, const IntPoly& r) {
  const RatPoly one = RatPoly::constant(1);
  const RatPoly tm1 = t - one;
  return rem((RatPoly::constant(2) - t) * tm1 * tm1, to_rat(r));
}

RatPoly compute_q(const RatPoly& t, const RatPoly& y) { return (t * t + y * y) * Rational(1, 4); }

Rational rho_of_family(const RatPoly&, const RatPoly& r, const RatPoly& q) {
  if (r.degree() < 1) throw std::invalid_argument("rho_of_family: r must be non-constant");
  Rational v(q.degree(), r.degree());
  v.canonicalize();
  return v;
}

std::string PrimeRepresentation::diagnosis() const {
  if (ok()) return "represents primes";
  std::string s;
  auto add = [&s](const std::string& part) { s += (s.empty() ? "" : "; ") + part; };
  if (!irreducible) add("not irreducible or constant");
  if (!positive_lead) add("leading coefficient not positive");
  if (!integral_somewhere) add("no integral value");
  else if (!coprime_values) add("fixed divisor " + value_gcd.get_str() + " (window evidence)");
  return s;
}

PrimeRepresentation represents_primes(const RatPoly& f, unsigned window) {
  PrimeRepresentation out;
  if (f.is_zero()) return out;
  out.irreducible = is_irreducible(f);
  out.positive_lead = f.lead() > 0;

  const Integer den = denominator_lcm(f);
  out.integrality_modulus = den;
  const IntPoly scaled = *to_int(f * Rational(den));
  if (den == 1) {
    out.integral_classes.push_back(0);
  } else {
    for (Integer x = 0; x < den; ++x)
      if (evaluate_mod(scaled, x, den) == 0) out.integral_classes.push_back(x);
  }
  out.integral_somewhere = !out.integral_classes.empty();
  if (!out.integral_somewhere) return out;

  Integer g = 0;
  for (unsigned i = 0; i < window; ++i) {
    const Integer x = i;
    if (den != 1 && evaluate_mod(scaled, x, den) != 0) continue;
    Integer v = evaluate(scaled, x);
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), den.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  out.value_gcd = g;
  out.coprime_values = g == 1;
  return out;
}

FamilyReport verify_family(const RatPoly& t, const IntPoly& r, const RatPoly& q, const RatPoly& y) {
  FamilyReport rep;
  const RatPoly rr = to_rat(r);
  const RatPoly one = RatPoly::constant(1);

  rep.cm_identity = q * Rational(4) - t * t == y * y;
  if (r.degree() >= 1) {
    rep.r_divides_q_plus_1_minus_t = divides(rr, q + one - t);
    rep.r_divides_phi8_t_minus_1 = divides(rr, compose(phi8(), t - one));
  }

  if (q.degree() >= 1) {
    const Factorization fq = factor_over_Q(q);
    if (fq.factors.size() == 1) {
      const unsigned e = fq.factors[0].multiplicity;
      if (auto c = rational_root(fq.unit, e)) {
        rep.q_exponent = e;
        rep.q_power_represents_primes = represents_primes(to_rat(fq.factors[0].factor) * *c).ok();
      }
    }
  }

  if (r.degree() >= 1) {
    const PrimeRepresentation pr = represents_primes(rr);
    if (pr.ok()) {
      rep.r_represents_primes = true;
      rep.r_cofactor = 1;
    } else if (pr.irreducible && pr.positive_lead && pr.integral_somewhere && pr.value_gcd > 1) {
      // r = c * r~ with c the fixed divisor of r.
      const RatPoly reduced = rr * Rational(Integer(1), pr.value_gcd);
      if (represents_primes(reduced).ok()) {
        rep.r_represents_primes = true;
        rep.r_cofactor = pr.value_gcd;
      }
    }
  }
  return rep;
}

}  // namespace pfc
