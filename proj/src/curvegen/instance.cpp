#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "pfc/curvegen.hpp"

namespace pfc {

namespace {

// f = num / den with num integral, for exact evaluation at integers.
struct ScaledPoly {
  IntPoly num;
  Integer den = 1;

  explicit ScaledPoly(const RatPoly& f) : den(denominator_lcm(f)) { num = *to_int(f * Rational(den)); }

  std::optional<Integer> at(const Integer& x) const {
    Integer v = evaluate(num, x);
    if (den == 1) return v;
    if (!mpz_divisible_p(v.get_mpz_t(), den.get_mpz_t())) return std::nullopt;
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), den.get_mpz_t());
    return v;
  }
};

struct FamilyValues {
  Integer t, r, q, y;
};

struct FamilyEval {
  ScaledPoly t, r, q, y;
  explicit FamilyEval(const FamilyCandidate& f) : t(f.t), r(to_rat(f.r)), q(f.q), y(f.y) {}

  std::optional<FamilyValues> at(const Integer& x) const {
    auto tv = t.at(x), rv = r.at(x), qv = q.at(x), yv = y.at(x);
    if (!tv || !rv || !qv || !yv) return std::nullopt;
    return FamilyValues{*tv, *rv, *qv, *yv};
  }
};

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Per-candidate PRNG stream.
std::uint64_t stream_seed(std::uint64_t seed, const Integer& x) {
  std::uint64_t h = splitmix(seed);
  const Integer m = abs(x);
  const std::size_t limbs = mpz_size(m.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) h = splitmix(h ^ mpz_getlimbn(m.get_mpz_t(), static_cast<mp_size_t>(i)));
  return splitmix(h ^ (x < 0 ? 1 : 0));
}

Integer fmod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

constexpr long kSmallX = 64;

bool is_small(const Integer& x) { return abs(x) < kSmallX; }

}  // namespace

bool SieveSpec::admits(const Integer& x) const {
  return std::binary_search(residues.begin(), residues.end(), fmod(x, modulus));
}

SieveSpec sieve_residues(const FamilyCandidate& family, const std::vector<unsigned>& small_primes) {
  const FamilyEval ev(family);
  Integer d = 1;
  for (const Integer* den : {&ev.t.den, &ev.r.den, &ev.q.den, &ev.y.den})
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den->get_mpz_t());
  SieveSpec spec;
  spec.modulus = d;
  for (unsigned p : small_primes) spec.modulus *= p;
  for (Integer x = 0; x < spec.modulus; ++x) {
    auto v = ev.at(x);
    if (!v) continue;
    const Integer qr = v->q * v->r;
    bool ok = true;
    for (unsigned p : small_primes) ok = ok && !mpz_divisible_ui_p(qr.get_mpz_t(), p);
    if (ok) spec.residues.push_back(x);
  }
  return spec;
}

void complete(CurveInstance& inst) {
  inst.order = inst.q + 1 - inst.t;
  inst.rho_e = (inst.q > 1 && inst.r > 1) ? lg(inst.q) / lg(inst.r) : 0.0;
  inst.hw_t = hamming_weight(inst.t);
  inst.hw_r = hamming_weight(inst.r);
}

bool Transcript::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.informational || c.pass; });
}

const Check* Transcript::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Transcript verify_curve(const CurveInstance& inst, unsigned mr_rounds, std::uint64_t seed) {
  Transcript tr;
  auto add = [&tr](std::string name, bool pass, std::string detail = {}, bool info = false) {
    tr.checks.push_back({std::move(name), pass, std::move(detail), info});
  };
  const Integer &q = inst.q, &r = inst.r, &t = inst.t, &y = inst.y;
  const Integer order = q + 1 - t;

  const bool q_prime = is_prime(q, mr_rounds, seed);
  add("q_prime", q_prime);
  add("r_prime", is_prime(r, mr_rounds, seed));
  add("hasse", t * t <= 4 * q, "t^2 <= 4q");
  add("cm_identity", 4 * q == t * t + y * y, "4q = t^2 + y^2");
  add("order", inst.order == order, "#E = q + 1 - t");
  add("r_divides_order", r > 0 && mpz_divisible_p(order.get_mpz_t(), r.get_mpz_t()));

  bool emb = r > 1;
  if (emb) {
    const Integer qr = fmod(q, r);
    Integer pw = 1;
    for (int j = 1; j <= 8; ++j) {
      pw = pw * qr % r;
      const bool one = pw == 1;
      if ((j < 8 && one) || (j == 8 && !one)) emb = false;
    }
  }
  add("embedding_degree", emb, "r | q^8 - 1 and r does not divide q^j - 1 for j < 8");
  add("r_ge_sqrt_q", r * r >= q, "r^2 >= q");

  const bool nonsingular = q > 0 && fmod(inst.a, q) != 0;
  add("nonsingular", nonsingular, "a != 0 mod q");
  if (q_prime && nonsingular && q > 3) {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(static_cast<unsigned long>(seed));
    const Curve E{q, fmod(inst.a, q)};
    bool pts = true;
    try {
      for (int i = 0; i < 2; ++i) pts = pts && E.mul(order, E.random_point(rng)).infinity;
    } catch (const std::exception&) {
      pts = false;
    }
    add("point_order", pts, "[q + 1 - t]P = O for two random points");
    bool excl = false;
    try {
      excl = twist_order_test(q, inst.a, t, y, rng);
    } catch (const std::exception&) {
      excl = false;
    }
    add("twist_exclusive", excl, "q + 1 - t is the only twist order annihilating the points");
  } else {
    add("point_order", false, "skipped: q not prime or a = 0");
    add("twist_exclusive", false, "skipped: q not prime or a = 0");
  }

  char buf[96];
  const double lgr = r > 0 ? lg(r) : 0.0, lgq = q > 0 ? lg(q) : 0.0;
  std::snprintf(buf, sizeof buf, "lg r = %.4f, need lg r / 8 > 8", lgr);
  add("policy_lg_r", lgr / 8 > 8, buf, true);
  std::snprintf(buf, sizeof buf, "%.4f (lg q = %.4f, lg r = %.4f)", lgr > 0 ? lgq / lgr : 0.0, lgq, lgr);
  add("rho_e", true, buf, true);
  add("hamming_weight", true, "t: " + std::to_string(hamming_weight(t)) + ", r: " + std::to_string(hamming_weight(r)),
      true);
  return tr;
}

Integer start_for_bits(const FamilyCandidate& family, unsigned bits, int direction) {
  Integer bound = 1;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), bits);
  const int dir = direction < 0 ? -1 : 1;
  auto big = [&](const Integer& n) { return evaluate(family.r, Integer(n * dir)) >= bound; };
  if (big(0)) return 0;
  Integer hi = 1;
  while (!big(hi)) hi *= 2;
  Integer lo = hi / 2;  // big(lo) false
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    (big(mid) ? hi : lo) = mid;
  }
  return hi * dir;
}

CurveInstance next_instance(const FamilyCandidate& family, const Integer& start, int direction,
                            const SearchOptions& opts) {
  const int dir = direction < 0 ? -1 : 1;
  const FamilyEval ev(family);
  const SieveSpec sieve = sieve_residues(family, opts.sieve_primes);

  // Next candidate at or beyond x in the search direction.
  auto advance = [&](const Integer& x) -> std::optional<Integer> {
    if (is_small(x)) return x;
    if (sieve.residues.empty()) return std::nullopt;
    const Integer r0 = fmod(x, sieve.modulus);
    const Integer base = x - r0;
    Integer nx;
    if (dir > 0) {
      auto it = std::lower_bound(sieve.residues.begin(), sieve.residues.end(), r0);
      nx = it != sieve.residues.end() ? Integer(base + *it) : Integer(base + sieve.modulus + sieve.residues.front());
    } else {
      auto it = std::upper_bound(sieve.residues.begin(), sieve.residues.end(), r0);
      nx = it != sieve.residues.begin() ? Integer(base + *std::prev(it)) : Integer(base - sieve.modulus + sieve.residues.back());
    }
    // Do not jump over the directly tested small range.
    if (dir > 0 && x < 0 && nx > -kSmallX) return Integer(-kSmallX + 1);
    if (dir < 0 && x > 0 && nx < kSmallX) return Integer(kSmallX - 1);
    return nx;
  };

  struct Hit {
    FamilyValues v;
    std::uint64_t seed;
  };
  auto test = [&](const Integer& x) -> std::optional<Hit> {
    auto v = ev.at(x);
    if (!v || v->r < 2 || v->q < 5) return std::nullopt;
    const std::uint64_t s = stream_seed(opts.seed, x);
    if (!is_prime(v->r, opts.mr_rounds, s) || !is_prime(v->q, opts.mr_rounds, s)) return std::nullopt;
    return Hit{*v, s};
  };

  const unsigned jobs = std::max(1u, opts.jobs);
  const std::size_t batch = jobs == 1 ? 1 : 64 * static_cast<std::size_t>(jobs);
  std::uint64_t examined = 0;
  Integer x = start;
  while (examined < opts.budget) {
    std::vector<Integer> xs;
    while (xs.size() < batch && examined < opts.budget) {
      auto nx = advance(x);
      if (!nx) throw SearchBudgetExhausted("no admissible residue class");
      xs.push_back(*nx);
      x = *nx + dir;
      ++examined;
    }
    std::vector<std::optional<Hit>> hits(xs.size());
    if (jobs == 1) {
      hits[0] = test(xs[0]);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&] {
          for (std::size_t i; (i = next.fetch_add(1)) < xs.size();) hits[i] = test(xs[i]);
        });
      for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!hits[i]) continue;
      const FamilyValues& v = hits[i]->v;
      CurveInstance inst{xs[i], v.q, v.r, v.t, v.y, 0, 0};
      try {
        inst.a = cm_curve(v.q, v.t, v.y, hits[i]->seed);
      } catch (const NoTwistFound&) {
        continue;
      }
      complete(inst);
      return inst;
    }
  }
  throw SearchBudgetExhausted("search budget exhausted after " + std::to_string(examined) + " candidates");
}

}  // namespace pfc
