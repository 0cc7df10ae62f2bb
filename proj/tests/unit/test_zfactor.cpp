#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "pfc/zfactor.hpp"

using namespace pfc;

TEST_CASE("cyclotomic polynomials multiply to x^n - 1") {
  for (unsigned n = 1; n <= 64; ++n) {
    IntPoly prod = IntPoly::constant(1);
    for (unsigned d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic(d);
    CHECK(prod == IntPoly::monomial(1, n) - IntPoly::constant(1));
  }
  CHECK(cyclotomic(8) == IntPoly({1, 0, 0, 0, 1}));
  CHECK(cyclotomic(12) == IntPoly({1, 0, -1, 0, 1}));
  CHECK_THROWS(cyclotomic(0));
  CHECK_THROWS(cyclotomic(65));
}

TEST_CASE("linear factors mod 17 match brute-force roots") {
  std::mt19937_64 rng(17);
  const Integer p = 17;
  for (int it = 0; it < 200; ++it) {
    std::vector<Integer> c(rng() % 7 + 2);
    for (auto& v : c) v = static_cast<long>(rng() % 17);
    if (c.back() == 0) c.back() = 1;
    const IntPoly f(c);
    std::vector<Integer> roots;
    for (long x = 0; x < 17; ++x)
      if (evaluate_mod(f, x, p) == 0) roots.push_back(x);
    std::vector<IntPoly> fac;
    try {
      fac = factor_mod_p(f, p);
    } catch (const BadPrime&) {
      continue;  // repeated factor mod 17
    }
    std::vector<Integer> lin;
    int total = 0;
    for (const auto& g : fac) {
      CHECK(g.lead() == 1);
      total += g.degree();
      if (g.degree() == 1) lin.push_back((p - g.coeff(0)) % p);
    }
    std::sort(lin.begin(), lin.end());
    CHECK(lin == roots);
    CHECK(total == f.degree());
  }
}

TEST_CASE("random products of irreducibles refactor canonically") {
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 150; ++it) {
    const int k = static_cast<int>(rng() % 4) + 1;
    std::map<std::vector<Integer>, unsigned> want;
    std::vector<Integer> prod{1};
    for (int i = 0; i < k; ++i) {
      auto g = oracle::random_irreducible(rng, static_cast<int>(rng() % 4) + 1);
      const unsigned e = rng() % 5 == 0 ? 2 : 1;
      want[g] += e;
      for (unsigned j = 0; j < e; ++j) prod = oracle::raw_mul(prod, g);
    }
    long s = static_cast<long>(rng() % 7) - 3;
    if (s == 0) s = 5;
    const Integer scale = s;
    for (auto& v : prod) v *= scale;
    const Factorization f = factor_over_Z(IntPoly(prod));

    CHECK(f.unit == Rational(scale));
    std::map<std::vector<Integer>, unsigned> got;
    for (const auto& fp : f.factors) {
      auto cs = fp.factor.coeffs();
      got[std::vector<Integer>(cs.begin(), cs.end())] += fp.multiplicity;
      CHECK(fp.factor.lead() > 0);
      CHECK(content(fp.factor) == 1);
    }
    CHECK(got == want);
    CHECK(expand(f) == to_rat(IntPoly(prod)));
    for (std::size_t i = 1; i < f.factors.size(); ++i)
      CHECK(f.factors[i - 1].factor.degree() <= f.factors[i].factor.degree());
  }
}

TEST_CASE("small irreducibility facts") {
  // x^4 + 1 is irreducible over Q but splits modulo every prime.
  CHECK(is_irreducible(IntPoly({1, 0, 0, 0, 1})));
  CHECK(factor_mod_p(IntPoly({1, 0, 0, 0, 1}), 17).size() == 4);
  CHECK(factor_mod_p(IntPoly({1, 0, 0, 0, 1}), 3).size() == 2);
  // x^2 - 2: nonsquare discriminant; x^2 - 4 has roots 2 and -2.
  CHECK(is_irreducible(IntPoly({-2, 0, 1})));
  CHECK_FALSE(is_irreducible(IntPoly({-4, 0, 1})));
  CHECK_FALSE(is_irreducible(IntPoly::constant(5)));
  // x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2).
  const auto f = factor_over_Z(IntPoly({4, 0, 0, 0, 1}));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].factor == IntPoly({2, -2, 1}));
  CHECK(f.factors[1].factor == IntPoly({2, 2, 1}));
  // Swinnerton-Dyer style: x^4 - 10x^2 + 1 splits mod every prime.
  CHECK(is_irreducible(IntPoly({1, 0, -10, 0, 1})));
}

TEST_CASE("squarefree decomposition") {
  const IntPoly a({1, 1}), b({-2, 0, 1});
  const auto sq = squarefree_decompose(a * a * a * b * IntPoly({3}));
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].factor == b);
  CHECK(sq[0].multiplicity == 1);
  CHECK(sq[1].factor == a);
  CHECK(sq[1].multiplicity == 3);
}

TEST_CASE("rational input and x^32 + 1") {
  const auto f = factor_over_Q(RatPoly({Rational(1, 2), 0, 0, 0, Rational(1, 2)}));
  CHECK(f.unit == Rational(1, 2));
  CHECK(f.factors.size() == 1);
  CHECK(is_irreducible(cyclotomic(64)));
  const auto g = factor_over_Z(IntPoly::monomial(1, 24) - IntPoly::constant(1));
  CHECK(g.factors.size() == 8);  // one cyclotomic factor per divisor of 24
}
