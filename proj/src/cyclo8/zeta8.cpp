#include "pfc/cyclo8.hpp"

namespace pfc {

Zeta8Element Zeta8Element::zeta(unsigned power) {
  Zeta8Element w;
  const unsigned e = power % 8;
  w.a[e % 4] = e < 4 ? 1 : -1;
  return w;
}

Zeta8Element operator+(const Zeta8Element& x, const Zeta8Element& y) {
  Zeta8Element r;
  for (int i = 0; i < 4; ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

Zeta8Element operator-(const Zeta8Element& x, const Zeta8Element& y) {
  Zeta8Element r;
  for (int i = 0; i < 4; ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

Zeta8Element operator-(const Zeta8Element& x) {
  Zeta8Element r;
  for (int i = 0; i < 4; ++i) r.a[i] = -x.a[i];
  return r;
}

Zeta8Element operator*(const Zeta8Element& x, const Zeta8Element& y) {
  Zeta8Element r;
  for (int i = 0; i < 4; ++i) {
    if (x.a[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      const Rational v = x.a[i] * y.a[j];
      if (i + j < 4)
        r.a[i + j] += v;
      else
        r.a[i + j - 4] -= v;
    }
  }
  return r;
}

Zeta8Element c8_mul(const Zeta8Element& x, const Zeta8Element& y) { return x * y; }

Zeta8Element c8_pow(const Zeta8Element& x, unsigned e) {
  Zeta8Element r = Zeta8Element::rational(1), b = x;
  for (; e; e >>= 1) {
    if (e & 1) r = r * b;
    b = b * b;
  }
  return r;
}

Zeta8Element evaluate(const RatPoly& p, const Zeta8Element& omega) {
  Zeta8Element r;
  for (std::size_t i = p.size(); i-- > 0;) r = r * omega + Zeta8Element::rational(p.coeff(i));
  return r;
}

std::string to_string(const Zeta8Element& w) {
  std::string out;
  for (int i = 0; i < 4; ++i) {
    const Rational& c = w.a[i];
    if (c == 0) continue;
    std::string term;
    if (i == 0) {
      term = c.get_str();
    } else {
      if (c == -1)
        term = "-";
      else if (c != 1)
        term = c.get_str() + "*";
      term += i == 1 ? "z" : "z^" + std::to_string(i);
    }
    if (!out.empty() && term[0] != '-') out += '+';
    out += term;
  }
  return out.empty() ? "0" : out;
}

Zeta8Element parse_zeta8(std::string_view text) {
  const RatPoly p = parse_ratpoly(text, 'z');
  Zeta8Element w;
  // Higher powers reduce through z^4 = -1.
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational& c = p.coeff(i);
    w.a[i % 4] += ((i / 4) % 2 == 0) ? c : Rational(-c);
  }
  return w;
}

}  // namespace pfc
