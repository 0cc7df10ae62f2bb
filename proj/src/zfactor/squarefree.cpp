#include "pfc/zfactor.hpp"

namespace pfc {

std::vector<FactorPower> squarefree_decompose(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_decompose: zero polynomial");
  std::vector<FactorPower> out;
  if (p.degree() == 0) return out;

  // Yun over Q.
  const RatPoly f = to_rat(p);
  const RatPoly df = derivative(f);
  const RatPoly a0 = gcd(f, df);
  RatPoly b = divrem(f, a0).quotient;
  RatPoly c = divrem(df, a0).quotient;
  RatPoly d = c - derivative(b);
  for (unsigned i = 1; b.degree() > 0; ++i) {
    RatPoly a = gcd(b, d);
    if (a.degree() > 0) out.push_back({content_primitive(a).primitive, i});
    b = divrem(b, a).quotient;
    c = divrem(d, a).quotient;
    d = c - derivative(b);
  }
  return out;
}

}  // namespace pfc
