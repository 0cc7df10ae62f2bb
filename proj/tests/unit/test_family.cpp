#include <doctest.h>

#include <random>
#include <set>

#include "reference_values.hpp"
#include "pfc/family.hpp"
#include "pfc/zfactor.hpp"

using namespace pfc;

namespace {

// Family conditions checked on integer values, not on polynomials.
void check_identities_on_values(const FamilyCandidate& f) {
  int integral = 0;
  for (long x = -60; x <= 60; ++x) {
    const Rational t = evaluate(f.t, x), y = evaluate(f.y, x), q = evaluate(f.q, x);
    const Integer r = evaluate(f.r, Integer(x));
    CHECK(4 * q == t * t + y * y);
    if (q.get_den() != 1 || t.get_den() != 1 || r == 0) continue;
    ++integral;
    const Integer qi = q.get_num(), ti = t.get_num();
    // Quotients over Q may carry a power of 2 in the denominator; at such x
    // r(x) is even and never a prime, so only its odd part must divide.
    Integer odd = abs(r);
    while (odd % 2 == 0) odd /= 2;
    const Integer s = ti - 1;
    CHECK((qi + 1 - ti) % odd == 0);
    CHECK(4 * (qi + 1 - ti) % r == 0);
    CHECK((s * s * s * s + 1) % r == 0);
  }
  CHECK(integral > 0);
}

}  // namespace

TEST_CASE("lc 82 cubic, exponent 5") {
  const RatPoly u = parse_ratpoly("82*x^3+108*x^2+54*x+9");
  const IntPoly r = parse_intpoly("82*x^4+108*x^3+54*x^2+12*x+1");
  const FamilyCandidate f = make_family(u, r, 5);
  CHECK(f.accepted());
  CHECK(f.report.ok());
  CHECK(f.t == parse_ratpoly("-82*x^3-108*x^2-54*x-8"));
  CHECK(f.y == parse_ratpoly("1230*x^3+1292*x^2+460*x+54"));
  CHECK(f.q == parse_ratpoly("379906*x^6+799008*x^5+705346*x^4+333614*x^3+88945*x^2+12636*x+745"));
  CHECK(f.rho == Rational(3, 2));
  check_identities_on_values(f);
}

TEST_CASE("represents primes") {
  CHECK(represents_primes(parse_ratpoly("x^2+1")).ok());
  CHECK(represents_primes(parse_ratpoly("1/2*x^2+1/2*x+1")).ok());

  const auto even = represents_primes(parse_ratpoly("x^2+x+2"));
  CHECK_FALSE(even.ok());
  CHECK(even.value_gcd == 2);
  CHECK_FALSE(represents_primes(parse_ratpoly("-x^2-1")).positive_lead);
  CHECK_FALSE(represents_primes(parse_ratpoly("x^2-1")).irreducible);
  CHECK_FALSE(represents_primes(parse_ratpoly("1/2*x^2+1/4")).integral_somewhere);

  const auto half = represents_primes(parse_ratpoly("1/2*x^2+1/2"));
  CHECK(half.integrality_modulus == 2);
  CHECK(half.integral_classes == std::vector<Integer>{1});
  CHECK(half.ok());
}

TEST_CASE("emitted families satisfy the family identities") {
  int n = 0;
  for (const auto& row : fixtures::kTable) {
    for (const auto& f : build_families(parse_ratpoly(row.u))) {
      ++n;
      CHECK(f.report.ok());
      CHECK(f.t.degree() < f.r.degree());
      Rational rho(f.q.degree(), f.r.degree());
      rho.canonicalize();
      CHECK(f.rho == rho);
      CHECK(rem(compose(to_rat(cyclotomic(8)), f.u), to_rat(f.r)).is_zero());
      check_identities_on_values(f);
    }
  }
  CHECK(n > 40);
}

TEST_CASE("mutated families are rejected") {
  const RatPoly u = parse_ratpoly("82*x^3+108*x^2+54*x+9");
  const IntPoly r = parse_intpoly("82*x^4+108*x^3+54*x^2+12*x+1");
  const FamilyCandidate f = make_family(u, r, 5);

  auto rep = verify_family(f.t, f.r, f.q + RatPoly::constant(1), f.y);
  CHECK_FALSE(rep.cm_identity);
  CHECK_FALSE(rep.r_divides_q_plus_1_minus_t);
  CHECK_FALSE(rep.ok());
  rep = verify_family(f.t + RatPoly::constant(4), f.r, f.q, f.y);
  CHECK_FALSE(rep.r_divides_phi8_t_minus_1);
  CHECK_FALSE(verify_family(f.t, f.r, f.q * Rational(2), f.y).ok());

  CHECK_THROWS_AS(compute_t(u, r + IntPoly::constant(1), 5), std::invalid_argument);
  CHECK_THROWS_AS(compute_t(u, r, 2), std::invalid_argument);
  CHECK_THROWS_AS(compute_t(u, r, 9), std::invalid_argument);
}

TEST_CASE("dagger rows have no accepted pair") {
  for (const char* s : {"216*x^3+372*x^2+263*x+69", "225*x^3+2*x"}) {
    CHECK(build_families(parse_ratpoly(s)).empty());
    CHECK_FALSE(build_families(parse_ratpoly(s), true).empty());
  }
}

TEST_CASE("transport evaluates at the substituted point") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 100; ++it) {
    std::vector<Rational> c(rng() % 5 + 1);
    for (auto& v : c) v = static_cast<long>(rng() % 21) - 10;
    const RatPoly f(c);
    NormalizationMap m;
    m.scale = Rational(static_cast<long>(rng() % 9) + 1, static_cast<unsigned long>(rng() % 4) + 1);
    m.scale.canonicalize();
    m.shift = Rational(static_cast<long>(rng() % 11) - 5, static_cast<unsigned long>(rng() % 3) + 1);
    m.shift.canonicalize();
    const RatPoly g = transport(f, m);
    CHECK(g.degree() == f.degree());
    for (long x = -3; x <= 3; ++x) CHECK(evaluate(g, x) == evaluate(f, m.scale * x + m.shift));
  }
}

TEST_CASE("normalization") {
  auto norm = [](const char* w) { return to_string(normalize(solve_u(parse_zeta8(w)).poly()).u); };
  CHECK(norm("z+z^2+z^3") == "2*x^3+2*x^2+4*x+1");
  CHECK(norm("z^2+z^3") == "9*x^3+3*x^2+2*x+1");
  CHECK(norm("9*z+3*z^2+z^3") == "82*x^3+108*x^2+54*x+9");
  CHECK(norm("4*z+6*z^2+9*z^3") == "873*x^3+969*x^2+379*x+53");
  CHECK(normalize_all(solve_u(parse_zeta8("2*z+3*z^2+2*z^3")).poly()).size() == 2);

  for (const char* w : {"z^2+z^3", "9*z+3*z^2+z^3", "2*z+3*z^2+2*z^3", "1+2*z+z^3"}) {
    const RatPoly raw = solve_u(parse_zeta8(w)).poly();
    for (const auto& n : normalize_all(raw)) {
      // u_norm = sign * raw(scale x + shift), and u_norm(omega') = +-zeta_8 stays a root of Phi_8.
      CHECK(to_rat(n.u) == transport(raw, n.map) * Rational(n.map.sign));
      CHECK(n.u.degree() == 3);
      NormalizationMap m;
      CHECK(canonical_cubic(n.u, &m) == n.u);
    }
  }
}

TEST_CASE("canonical cubic is invariant under the substitution group") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 100; ++it) {
    const IntPoly u({static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 41) - 20,
                     static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 20) + 1});
    NormalizationMap m;
    const IntPoly c = canonical_cubic(u, &m);
    CHECK(to_rat(c) == transport(to_rat(u), m) * Rational(m.sign));
    const long shift = static_cast<long>(rng() % 7) - 3;
    const IntPoly moved = -compose(u, IntPoly({shift, -1}));
    CHECK(canonical_cubic(moved) == c);
  }
}

TEST_CASE("scan over a small box") {
  ScanBox box;
  box.hi = {1, 1, 1, 1};
  const ScanResult a = scan(box, 1), b = scan(box, 4);
  REQUIRE(a.families.size() == b.families.size());
  for (std::size_t i = 0; i < a.families.size(); ++i) {
    CHECK(a.families[i].u == b.families[i].u);
    CHECK(a.families[i].t == b.families[i].t);
  }
  CHECK(a.counters.omegas == 16);
  CHECK(a.families.size() == 10);
  std::set<std::string> lcs;
  for (const auto& f : a.families) {
    CHECK(f.accepted());
    CHECK(f.omega.has_value());
    lcs.insert(f.u.lead().get_str());
  }
  CHECK(lcs == std::set<std::string>{"2", "9"});

  ScanBox bad;
  bad.lo = {2, 0, 0, 0};
  bad.hi = {1, 0, 0, 0};
  CHECK_FALSE(bad.valid());
}
