#include <algorithm>
#include <stdexcept>

#include "pfc/family.hpp"

namespace pfc {

namespace {

// (max |coef|, negatives, coefficients from the leading one).
bool key_less(const IntPoly& a, const IntPoly& b) {
  Integer ma = 0, mb = 0;
  int na = 0, nb = 0;
  for (const auto& c : a.coeffs()) {
    if (abs(c) > ma) ma = abs(c);
    na += c < 0;
  }
  for (const auto& c : b.coeffs()) {
    if (abs(c) > mb) mb = abs(c);
    nb += c < 0;
  }
  if (ma != mb) return ma < mb;
  if (na != nb) return na < nb;
  return canonical_less(a, b);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

bool canonical_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

RatPoly transport(const RatPoly& f, const NormalizationMap& map) {
  return compose(f, RatPoly({map.shift, map.scale}));
}

IntPoly canonical_cubic(const IntPoly& u, NormalizationMap* map) {
  if (u.degree() != 3) throw std::invalid_argument("canonical_cubic: cubic required");
  std::optional<IntPoly> best;
  NormalizationMap best_map;
  for (int refl : {1, -1}) {
    IntPoly w = compose(u, IntPoly({0, refl}));
    const int s = w.lead() > 0 ? 1 : -1;
    w *= Integer(s);
    // The depressing shift -w2/(3 w3) sits at the centre of the search.
    const Integer centre = floor_div(-w.coeff(2), 3 * w.lead());
    for (int k = -4; k <= 4; ++k) {
      const Integer c = centre + k;
      IntPoly z = compose(w, IntPoly({c, 1}));
      if (!best || key_less(z, *best)) {
        best = std::move(z);
        // s * u(refl * (x + c)) = s * u(refl * x + refl * c)
        best_map = NormalizationMap{Rational(refl), Rational(refl * c), s};
      }
    }
  }
  if (map) *map = best_map;
  return *best;
}

std::vector<NormalizedCubic> normalize_all(const RatPoly& u, unsigned max_scale) {
  if (u.degree() != 3) throw std::invalid_argument("normalize: cubic required");
  const Integer den3 = u.lead().get_den();
  std::vector<NormalizedCubic> out;
  // The constant term u(b) must be integral; its integrality is periodic in b.
  const Integer den = denominator_lcm(u);
  if (den > 1 && den <= max_scale) {
    const IntPoly scaled = *to_int(u * Rational(den));
    bool any = false;
    for (Integer b = 0; b < den && !any; ++b) any = evaluate_mod(scaled, b, den) == 0;
    if (!any) return out;
  }
  for (unsigned a = 1; a <= max_scale && out.empty(); ++a) {
    const Integer A = a;
    if ((A * A * A) % den3 != 0) continue;
    for (unsigned b = 0; b < a; ++b) {
      const Rational B = b;
      if (evaluate(u, B).get_den() != 1) continue;
      auto v = to_int(compose(u, RatPoly({B, Rational(A)})));
      if (!v) continue;
      NormalizationMap inner;
      IntPoly c = canonical_cubic(*v, &inner);
      // u_norm(x) = s * u(A * (refl * x + shift) + b)
      NormalizationMap m{inner.scale * A, inner.shift * A + B, inner.sign};
      if (std::none_of(out.begin(), out.end(), [&](const NormalizedCubic& n) { return n.u == c; }))
        out.push_back({std::move(c), m});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const NormalizedCubic& x, const NormalizedCubic& y) { return key_less(x.u, y.u); });
  return out;
}

NormalizedCubic normalize(const RatPoly& u, unsigned max_scale) {
  auto all = normalize_all(u, max_scale);
  if (all.empty()) throw std::domain_error("normalize: no integral reparametrization within the scale bound");
  return all.front();
}

}  // namespace pfc
