#pragma once

// Exact integer, rational and univariate polynomial arithmetic.
//
// Integer and Rational are GMP's C++ classes. Polynomials are dense,
// ascending-degree coefficient vectors kept in canonical form: the highest
// stored coefficient is nonzero, and the zero polynomial stores nothing.

#include <gmpxx.h>

#include <climits>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pfc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Degree reported for the zero polynomial. Compares below every real degree.
inline constexpr int kZeroDegree = INT_MIN;

class DivisionByZeroPolynomial : public std::domain_error {
 public:
  DivisionByZeroPolynomial() : std::domain_error("division by the zero polynomial") {}
};

class PolyParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <typename T>
class Poly {
 public:
  using value_type = T;

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  static Poly monomial(const T& v, std::size_t k) {
    std::vector<T> c(k + 1);
    c[k] = v;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(T(1), 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }

  const T& lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }
  /// Coefficient of x^i; zero beyond the stored range.
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  std::span<const T> coeffs() const { return c_; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }
  Poly& operator*=(const T& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const T& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using RatPoly = Poly<Rational>;
using IntPoly = Poly<Integer>;

// ---- division -----------------------------------------------------------

struct DivRem {
  RatPoly quotient;
  RatPoly remainder;
};

/// Euclidean division over Q. Throws DivisionByZeroPolynomial if `d` is zero.
DivRem divrem(const RatPoly& p, const RatPoly& d);
RatPoly rem(const RatPoly& p, const RatPoly& d);

/// Exact division in Z[x]; nullopt when `d` does not divide `p` over Z.
std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& d);

/// Monic gcd over Q (zero when both inputs are zero).
RatPoly gcd(RatPoly a, RatPoly b);

RatPoly derivative(const RatPoly& p);
IntPoly derivative(const IntPoly& p);

// ---- composition and evaluation -----------------------------------------

/// outer(inner(x)).
RatPoly compose(const RatPoly& outer, const RatPoly& inner);
IntPoly compose(const IntPoly& outer, const IntPoly& inner);

Rational evaluate(const RatPoly& p, const Rational& x);
Integer evaluate(const IntPoly& p, const Integer& x);
/// Horner with reduction at every step; result in [0, m). Requires m >= 2.
Integer evaluate_mod(const IntPoly& p, const Integer& x, const Integer& m);

// ---- content ------------------------------------------------------------

struct ContentPrimitive {
  Rational content;
  IntPoly primitive;
};

/// p = content * primitive, primitive has content 1 and positive leading
/// coefficient. Throws std::domain_error on the zero polynomial.
ContentPrimitive content_primitive(const RatPoly& p);
IntPoly primitive_part(const IntPoly& p);
Integer content(const IntPoly& p);

RatPoly to_rat(const IntPoly& p);
/// Nullopt unless every coefficient is an integer.
std::optional<IntPoly> to_int(const RatPoly& p);
/// lcm of the coefficient denominators (1 for the zero polynomial).
Integer denominator_lcm(const RatPoly& p);

// ---- text format --------------------------------------------------------
//
// Terms `c*x^k` in descending degree, sign attached to the coefficient,
// rationals as `p/q`: `82*x^4+108*x^3+54*x^2+12*x+1`, `3/2*x-1/3`.

std::string to_string(const RatPoly& p, char var = 'x');
std::string to_string(const IntPoly& p, char var = 'x');
RatPoly parse_ratpoly(std::string_view text, char var = 'x');
IntPoly parse_intpoly(std::string_view text, char var = 'x');
Rational parse_rational(std::string_view text);

}  // namespace pfc
