#include <algorithm>

#include "modpoly.hpp"
#include "pfc/zfactor.hpp"

namespace pfc {

namespace {

bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

bool good_prime(const IntPoly& f, const Integer& p) {
  if (f.lead() % p == 0) return false;
  const detail::MPoly fb = detail::reduce(f, p);
  return detail::deg(detail::gcd(fb, detail::derivative(fb, p), p)) == 0;
}

// |lc| * 2^n * ||f||_2, rounded up.
Integer coefficient_bound(const IntPoly& f) {
  Integer sq = 0;
  for (const auto& c : f.coeffs()) sq += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), sq.get_mpz_t());
  norm += 1;
  Integer b = abs(f.lead()) * norm;
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(f.degree()));
  return b;
}

bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t s = idx.size();
  for (std::size_t i = s; i-- > 0;) {
    if (idx[i] < n - s + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

IntPoly candidate(const std::vector<detail::MPoly>& lifted, const std::vector<std::size_t>& idx,
                  const Integer& lc, const Integer& m) {
  detail::MPoly g{detail::mod(lc, m)};
  for (auto i : idx) g = detail::mul(g, lifted[i], m);
  return primitive_part(detail::lift_symmetric(g, m));
}

// f primitive, squarefree, positive leading coefficient, degree >= 1.
std::vector<IntPoly> factor_squarefree(IntPoly f) {
  if (f.degree() == 1) return {f};

  Integer p = 5;
  while (!good_prime(f, p)) mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());

  const detail::MPoly fb = detail::make_monic(detail::reduce(f, p), p);
  const auto modular = detail::factor_mod_prime(fb, p, 0x5eedf00dULL);
  if (modular.size() == 1) return {f};

  const Integer limit = 2 * coefficient_bound(f);
  unsigned k = 1;
  Integer m = p;
  while (m <= limit) {
    m *= p;
    ++k;
  }
  std::vector<detail::MPoly> lifted = detail::hensel_lift(f, modular, p, k);

  std::vector<IntPoly> out;
  for (std::size_t s = 1; 2 * s <= lifted.size();) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    bool found = false;
    do {
      IntPoly g = candidate(lifted, idx, f.lead(), m);
      if (g.degree() < 1) continue;
      auto q = divide_exact(f, g);
      if (!q) continue;
      out.push_back(g);
      f = *q;
      for (std::size_t i = s; i-- > 0;) lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(idx[i]));
      found = true;
      break;
    } while (next_subset(idx, lifted.size()));
    if (!found) ++s;
  }
  if (f.degree() > 0) out.push_back(primitive_part(f));
  return out;
}

}  // namespace

Factorization factor_over_Z(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("factor_over_Z: zero polynomial");
  Integer c = content(p);
  if (p.lead() < 0) c = -c;
  Factorization out{Rational(c), {}};
  if (p.degree() == 0) return out;

  for (const auto& part : squarefree_decompose(p))
    for (auto& g : factor_squarefree(part.factor)) out.factors.push_back({std::move(g), part.multiplicity});

  std::sort(out.factors.begin(), out.factors.end(), [](const FactorPower& a, const FactorPower& b) {
    if (poly_less(a.factor, b.factor)) return true;
    if (poly_less(b.factor, a.factor)) return false;
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

Factorization factor_over_Q(const RatPoly& p) {
  if (p.is_zero()) throw std::domain_error("factor_over_Q: zero polynomial");
  auto [c, prim] = content_primitive(p);
  Factorization f = factor_over_Z(prim);
  f.unit *= c;
  return f;
}

bool is_irreducible(const IntPoly& p) {
  if (p.degree() < 1) return false;
  const Factorization f = factor_over_Z(p);
  return f.factors.size() == 1 && f.factors[0].multiplicity == 1 && f.factors[0].factor.degree() == p.degree();
}

bool is_irreducible(const RatPoly& p) {
  if (p.degree() < 1) return false;
  return is_irreducible(content_primitive(p).primitive);
}

RatPoly expand(const Factorization& f) {
  RatPoly r = RatPoly::constant(f.unit);
  for (const auto& fp : f.factors) {
    const RatPoly g = to_rat(fp.factor);
    for (unsigned i = 0; i < fp.multiplicity; ++i) r *= g;
  }
  return r;
}

}  // namespace pfc
