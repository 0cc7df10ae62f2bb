#include <utility>

#include "pfc/cyclo8.hpp"

namespace pfc {

InvariantRecord invariants(const Zeta8Element& omega) {
  const Rational &a1 = omega.a[1], &a2 = omega.a[2], &a3 = omega.a[3];
  const Rational a1s = a1 * a1, a2s = a2 * a2, a3s = a3 * a3;
  InvariantRecord r;
  const Rational s = a1 - a3, t = a1 + a3;
  r.d = (a1s + a3s) * (s * s + 2 * a2s) * (t * t - 2 * a2s);
  r.n0 = -a2 * (5 * a1s * a1s * a3 - 5 * a1s * a1 * a2s + 5 * a1 * a2s * a3s - 2 * a2s * a2s * a3 + 3 * a3s * a3s * a3);
  r.n1 = a1s * a1s * a1 - 4 * a1s * a1 * a3s + 9 * a1s * a2s * a3 + a1 * (2 * a2s * a2s + 3 * a3s * a3s) +
         3 * a2s * a3s * a3;
  r.n2 = a1s * a1 * a2 + 3 * a1 * a2 * a3s - 2 * a2s * a2 * a3;
  r.n3 = a3s * a3 - a1s * a3 + 2 * a1 * a2s;
  return r;
}

Matrix4 system_matrix(const Zeta8Element& omega) {
  const Rational &a0 = omega.a[0], &a1 = omega.a[1], &a2 = omega.a[2], &a3 = omega.a[3];
  const Rational p = a0 * a2 + a1 * a1 - a3 * a3;
  const Rational q = a1 * a3 + a2 * a2 - a0 * a0;
  Matrix4 m;
  m[0] = {1, a0, a0 * a0 - a2 * a2 - 2 * a1 * a3, a0 * a0 * a0 - 3 * a2 * p - 6 * a0 * a1 * a3};
  m[1] = {0, a1, 2 * a0 * a1 - 2 * a2 * a3, a3 * a3 * a3 - 3 * a1 * q - 6 * a0 * a2 * a3};
  m[2] = {0, a2, a1 * a1 - a3 * a3 + 2 * a0 * a2, -a2 * a2 * a2 + 3 * a0 * p - 6 * a1 * a2 * a3};
  m[3] = {0, a3, 2 * a1 * a2 + 2 * a0 * a3, a1 * a1 * a1 - 3 * a3 * q + 6 * a0 * a1 * a2};
  return m;
}

Matrix4 multiplication_matrix(const Zeta8Element& omega) {
  Matrix4 m;
  for (unsigned j = 0; j < 4; ++j) {
    const Zeta8Element col = omega * Zeta8Element::zeta(j);
    for (int i = 0; i < 4; ++i) m[i][j] = col.a[i];
  }
  return m;
}

namespace {

using IntRow = std::array<Integer, 5>;

// Rows scaled to integers; column 4 carries the right-hand side.
std::array<IntRow, 4> integer_rows(const Matrix4& m, const std::array<Rational, 4>& rhs) {
  std::array<IntRow, 4> out;
  for (int i = 0; i < 4; ++i) {
    Integer l = 1;
    for (int j = 0; j < 4; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m[i][j].get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rhs[i].get_den_mpz_t());
    for (int j = 0; j < 4; ++j) {
      const Rational v = m[i][j] * l;
      out[i][j] = v.get_num();
    }
    out[i][4] = Rational(rhs[i] * l).get_num();
  }
  return out;
}

// Bareiss elimination in place. Returns the number of row swaps, or -1 when singular.
int bareiss(std::array<IntRow, 4>& r) {
  int swaps = 0;
  Integer prev = 1;
  for (int k = 0; k < 4; ++k) {
    int piv = k;
    while (piv < 4 && r[piv][k] == 0) ++piv;
    if (piv == 4) return -1;
    if (piv != k) {
      std::swap(r[piv], r[k]);
      ++swaps;
    }
    for (int i = k + 1; i < 4; ++i) {
      for (int j = k + 1; j < 5; ++j) {
        Integer v = r[i][j] * r[k][k] - r[i][k] * r[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        r[i][j] = v;
      }
      r[i][k] = 0;
    }
    prev = r[k][k];
  }
  return swaps;
}

}  // namespace

Rational determinant(const Matrix4& m) {
  Rational scale = 1;
  for (int i = 0; i < 4; ++i) {
    Integer l = 1;
    for (int j = 0; j < 4; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m[i][j].get_den_mpz_t());
    scale *= l;
  }
  auto rows = integer_rows(m, {0, 0, 0, 0});
  const int swaps = bareiss(rows);
  if (swaps < 0) return 0;
  Rational det = Rational(rows[3][3]) / scale;
  return swaps % 2 ? Rational(-det) : det;
}

CubicU solve_u(const Zeta8Element& omega) {
  const InvariantRecord v = invariants(omega);
  if (v.d == 0) throw SingularSystem();
  if (v.n3 == 0) throw DegenerateCubic();
  const Rational& a0 = omega.a[0];
  const Rational a0s = a0 * a0;
  CubicU u;
  u.u0 = -(v.n3 * a0s * a0 + v.n2 * a0s + v.n1 * a0 - v.n0) / v.d;
  u.u1 = (3 * v.n3 * a0s + 2 * v.n2 * a0 + v.n1) / v.d;
  u.u2 = -(3 * v.n3 * a0 + v.n2) / v.d;
  u.u3 = v.n3 / v.d;
  return u;
}

CubicU solve_u_linear(const Zeta8Element& omega) {
  auto rows = integer_rows(system_matrix(omega), {0, 1, 0, 0});
  if (bareiss(rows) < 0) throw SingularSystem();
  std::array<Rational, 4> x;
  for (int i = 3; i >= 0; --i) {
    Rational s = rows[i][4];
    for (int j = i + 1; j < 4; ++j) s -= rows[i][j] * x[j];
    x[i] = s / rows[i][i];
  }
  if (x[3] == 0) throw DegenerateCubic();
  return CubicU{x[0], x[1], x[2], x[3]};
}

IntPoly min_poly(const Zeta8Element& omega) {
  // Faddeev-LeVerrier on the multiplication matrix.
  const Matrix4 a = multiplication_matrix(omega);
  auto mul = [](const Matrix4& x, const Matrix4& y) {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) r[i][j] += x[i][k] * y[k][j];
    return r;
  };
  std::vector<Rational> c(5);
  c[4] = 1;
  Matrix4 mk{};
  for (int k = 1; k <= 4; ++k) {
    Matrix4 next = mul(a, mk);
    for (int i = 0; i < 4; ++i) next[i][i] += c[5 - k];
    mk = next;
    const Matrix4 am = mul(a, mk);
    Rational tr = am[0][0] + am[1][1] + am[2][2] + am[3][3];
    c[4 - k] = -tr / k;
  }
  const RatPoly cp(std::move(c));
  const RatPoly g = gcd(cp, derivative(cp));
  return content_primitive(divrem(cp, g).quotient).primitive;
}

}  // namespace pfc
