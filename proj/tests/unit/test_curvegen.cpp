#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pfc/curvegen.hpp"
#include "pfc/serialize.hpp"

using namespace pfc;

namespace {

FamilyCandidate lc82() {
  return make_family(parse_ratpoly("82*x^3+108*x^2+54*x+9"), parse_intpoly("82*x^4+108*x^3+54*x^2+12*x+1"), 5);
}

}  // namespace

TEST_CASE("is_prime agrees with a sieve below 10^6") {
  const auto table = oracle::prime_table(1000000);
  std::size_t mismatches = 0;
  for (std::size_t n = 0; n < table.size(); ++n)
    if (is_prime(Integer(static_cast<unsigned long>(n))) != table[n]) ++mismatches;
  CHECK(mismatches == 0);
}

TEST_CASE("is_prime on large and adversarial inputs") {
  CHECK(is_prime(Integer("170141183460469231731687303715884105727")));  // 2^127 - 1
  CHECK_FALSE(is_prime(Integer("340282366920938463463374607431768211457")));  // 2^128 + 1
  CHECK_FALSE(is_prime(Integer("3825123056546413051")));  // strong pseudoprime to bases 2..23
  CHECK_FALSE(is_prime(Integer("318665857834031151167461")));  // strong pseudoprime to bases 2..37
  CHECK(is_prime(Integer("18446744073709551557")));  // largest prime below 2^64
  CHECK_FALSE(is_prime(Integer(-7)));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = rng() % 4000000000ULL;
    CHECK(is_prime(Integer(static_cast<unsigned long>(n))) == oracle::trial_division_prime(n));
  }
}

TEST_CASE("square roots mod p") {
  for (unsigned long p : {3UL, 5UL, 13UL, 17UL, 97UL, 104729UL, 998244353UL}) {
    for (unsigned long v = 0; v < 200; ++v) {
      const auto s = sqrt_mod(Integer(v), Integer(p));
      Integer e, base = v % p;
      mpz_powm_ui(e.get_mpz_t(), base.get_mpz_t(), (p - 1) / 2, Integer(p).get_mpz_t());
      const bool residue = base == 0 || e == 1;
      CHECK(s.has_value() == residue);
      if (s) CHECK((*s * *s - Integer(v)) % p == 0);
    }
  }
}

TEST_CASE("group laws on y^2 = x^3 + 3x over F_104729") {
  const Curve E{104729, 3};
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(9);
  const Integer n = oracle::count_points(104729, 3);
  const Point O = Point::at_infinity();
  for (int it = 0; it < 50; ++it) {
    const Point P = E.random_point(rng), Q = E.random_point(rng), R = E.random_point(rng);
    CHECK(E.on_curve(P));
    CHECK(E.add(P, O) == P);
    CHECK(E.add(P, E.neg(P)) == O);
    CHECK(E.add(P, Q) == E.add(Q, P));
    CHECK(E.add(E.add(P, Q), R) == E.add(P, E.add(Q, R)));
    CHECK(E.dbl(P) == E.add(P, P));
    CHECK(E.mul(5, P) == E.add(E.dbl(E.dbl(P)), P));
    CHECK(E.mul(n, P) == O);
    CHECK(E.on_curve(E.add(P, Q)));
  }
  CHECK(E.mul(0, E.random_point(rng)) == O);
  CHECK_THROWS_AS(E.inv(0), NonInvertible);
}

TEST_CASE("cm_curve picks the twist that exhaustive counting confirms") {
  const auto table = oracle::prime_table(100000);
  std::mt19937_64 pick(12);
  int tested = 0, skipped = 0;
  for (int tries = 0; tested < 60 && tries < 5000; ++tries) {
    const unsigned long q = 1000 + pick() % 99000;
    if (!table[q] || q % 4 != 1) continue;
    // 4q = t^2 + y^2 with t = 2A, y = 2B.
    long A = 0, B = 0;
    for (long a = 1; a * a < static_cast<long>(q) && A == 0; ++a) {
      const long b2 = static_cast<long>(q) - a * a;
      const long b = std::lround(std::sqrt(static_cast<double>(b2)));
      if (b * b == b2) A = a, B = b;
    }
    for (const auto& [t, y] : {std::pair{2 * A, 2 * B}, std::pair{-2 * B, 2 * A}}) {
      Integer a;
      try {
        a = cm_curve(q, t, y);
      } catch (const NoTwistFound&) {
        // Small groups where another twist order is a multiple of the target exponent.
        ++skipped;
        continue;
      }
      ++tested;
      CHECK(oracle::count_points(q, a.get_ui()) == Integer(q) + 1 - t);
    }
  }
  CHECK(tested >= 60);
  CHECK(skipped * 10 <= tested);
}

TEST_CASE("sieve residues are sound") {
  const FamilyCandidate f = lc82();
  const SieveSpec s = sieve_residues(f, {2, 3, 5});
  CHECK(s.modulus == 30);
  CHECK(s.residues == std::vector<Integer>{14, 24});

  // Oracle: every residue class whose q or r value is divisible by 2, 3 or 5.
  const SieveSpec big = sieve_residues(f, {2, 3, 5, 7, 11, 13});
  for (long x = 0; x < 30030; ++x) {
    const Integer q = evaluate(f.q, x).get_num(), r = evaluate(f.r, Integer(x));
    bool clean = true;
    for (long p : {2, 3, 5, 7, 11, 13})
      if (q % p == 0 || r % p == 0) clean = false;
    CHECK(big.admits(x) == clean);
  }
}

TEST_CASE("first instance of the lc 82 family from 100") {
  const CurveInstance inst = next_instance(lc82(), 100, 1);
  CHECK(inst.x0 == 104);
  CHECK(inst.q == Integer("490506332802458249"));
  CHECK(inst.r == Integer("9714910817"));
  const Transcript tr = verify_curve(inst);
  CHECK(tr.ok());
  REQUIRE(tr.find("policy_lg_r") != nullptr);
  CHECK(tr.find("policy_lg_r")->informational);

  SearchOptions opts;
  opts.jobs = 3;
  CHECK(next_instance(lc82(), 100, 1, opts).x0 == 104);
  opts.budget = 2;
  CHECK_THROWS_AS(next_instance(lc82(), 105, 1, opts), SearchBudgetExhausted);
}

TEST_CASE("verification catches a wrong twist and a wrong order") {
  CurveInstance inst = next_instance(lc82(), 100, 1);
  CurveInstance wrong = inst;
  wrong.a = inst.a + 1;
  complete(wrong);
  CHECK_FALSE(verify_curve(wrong).ok());
  wrong = inst;
  wrong.order += 2;
  CHECK_FALSE(verify_curve(wrong).find("order")->pass);
  wrong = inst;
  wrong.q += 2;
  CHECK_FALSE(verify_curve(wrong).ok());
}

TEST_CASE("json round trip") {
  const FamilyCandidate f = lc82();
  const Json j = to_json(f);
  const FamilyCandidate g = family_from_json(Json::parse(j.dump()));
  CHECK(g.t == f.t);
  CHECK(g.q == f.q);
  CHECK(g.m == 5);

  Json bad = j;
  bad["t"] = "x";
  CHECK_THROWS_AS(family_from_json(bad), std::invalid_argument);
  bad = j;
  bad.erase("r");
  CHECK_THROWS_AS(family_from_json(bad), std::invalid_argument);

  const CurveInstance inst = next_instance(f, 100, 1);
  const CurveInstance back = instance_from_json(Json::parse(to_json(inst).dump()));
  CHECK(back.q == inst.q);
  CHECK(back.a == inst.a);
  CHECK(back.y == inst.y);
  CHECK(back.order == inst.order);
  Json noy = to_json(inst);
  noy.erase("y");
  CHECK(abs(instance_from_json(noy).y) == abs(inst.y));
  CHECK_THROWS_AS(instance_from_json(Json{{"q", "12"}}), std::invalid_argument);
  CHECK(fixed4(1.53519) == "1.5352");
}
