#pragma once

// Arithmetic in Q(zeta_8) and the cubic u(x) with u(omega) = zeta_8.

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pfc/numpoly.hpp"

namespace pfc {

/// a[0] + a[1] z + a[2] z^2 + a[3] z^3 with z^4 = -1.
struct Zeta8Element {
  std::array<Rational, 4> a{};

  static Zeta8Element zeta(unsigned power = 1);
  static Zeta8Element rational(const Rational& v) { return Zeta8Element{{v, 0, 0, 0}}; }

  bool is_zero() const { return a[0] == 0 && a[1] == 0 && a[2] == 0 && a[3] == 0; }

  friend Zeta8Element operator+(const Zeta8Element& x, const Zeta8Element& y);
  friend Zeta8Element operator-(const Zeta8Element& x, const Zeta8Element& y);
  friend Zeta8Element operator-(const Zeta8Element& x);
  friend Zeta8Element operator*(const Zeta8Element& x, const Zeta8Element& y);
  friend bool operator==(const Zeta8Element& x, const Zeta8Element& y) { return x.a == y.a; }
};

Zeta8Element c8_mul(const Zeta8Element& x, const Zeta8Element& y);
Zeta8Element c8_pow(const Zeta8Element& x, unsigned e);

/// p(omega) computed in Q(zeta_8).
Zeta8Element evaluate(const RatPoly& p, const Zeta8Element& omega);

/// Text format `a0+a1*z+a2*z^2+a3*z^3`, ascending, zero terms omitted.
std::string to_string(const Zeta8Element& w);
Zeta8Element parse_zeta8(std::string_view text);

struct InvariantRecord {
  Rational d, n0, n1, n2, n3;
};

InvariantRecord invariants(const Zeta8Element& omega);

using Matrix4 = std::array<std::array<Rational, 4>, 4>;

/// A with A (u0 u1 u2 u3)^T = (0 1 0 0)^T; column j holds the coordinates of omega^j.
Matrix4 system_matrix(const Zeta8Element& omega);

/// Fraction-free (Bareiss) determinant.
Rational determinant(const Matrix4& m);

struct CubicU {
  Rational u0, u1, u2, u3;
  RatPoly poly() const { return RatPoly({u0, u1, u2, u3}); }
  friend bool operator==(const CubicU&, const CubicU&) = default;
};

class SingularSystem : public std::domain_error {
 public:
  SingularSystem() : std::domain_error("singular system: d = 0") {}
};

class DegenerateCubic : public std::domain_error {
 public:
  DegenerateCubic() : std::domain_error("degenerate cubic: n3 = 0") {}
};

/// Closed form from the invariants. Throws SingularSystem or DegenerateCubic.
CubicU solve_u(const Zeta8Element& omega);

/// Same cubic by fraction-free elimination on system_matrix; same errors.
CubicU solve_u_linear(const Zeta8Element& omega);

/// Minimal polynomial of omega over Q, primitive with positive leading coefficient.
IntPoly min_poly(const Zeta8Element& omega);

/// Matrix of multiplication by omega on the basis 1, z, z^2, z^3.
Matrix4 multiplication_matrix(const Zeta8Element& omega);

}  // namespace pfc
