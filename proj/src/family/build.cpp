#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "pfc/family.hpp"
#include "pfc/zfactor.hpp"

namespace pfc {

namespace {

template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const unsigned k = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
  for (unsigned w = 0; w < k; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) fn(i);
    });
  for (auto& t : pool) t.join();
}

bool family_less(const FamilyCandidate& a, const FamilyCandidate& b) {
  const IntPoly ua = *to_int(a.u), ub = *to_int(b.u);
  if (ua != ub) return canonical_less(ua, ub);
  if (a.r != b.r) return canonical_less(a.r, b.r);
  return a.m < b.m;
}

}  // namespace

std::string FamilyCandidate::reason() const {
  if (accepted()) return "accepted";
  std::string s;
  if (!r_status.ok()) s += "r: " + r_status.diagnosis();
  if (!q_status.ok()) s += std::string(s.empty() ? "" : "; ") + "q: " + q_status.diagnosis();
  return s;
}

namespace {

FamilyCandidate assemble(const RatPoly& u, const IntPoly& r, unsigned m, RatPoly t) {
  FamilyCandidate c;
  c.u = u;
  c.r = r;
  c.m = m;
  c.t = std::move(t);
  c.y = compute_y(c.t, r);
  c.q = compute_q(c.t, c.y);
  const RatPoly rr = to_rat(r);
  c.rho = rho_of_family(c.t, rr, c.q);
  c.r_status = represents_primes(rr);
  c.q_status = represents_primes(c.q);
  return c;
}

}  // namespace

FamilyCandidate make_family(const RatPoly& u, const IntPoly& r, unsigned m) {
  FamilyCandidate c = assemble(u, r, m, compute_t(u, r, m));
  c.report = verify_family(c.t, r, c.q, c.y);
  return c;
}

std::vector<FamilyCandidate> build_families(const RatPoly& u, bool diagnostic) {
  const RatPoly phi_u = compose(to_rat(cyclotomic(kEmbeddingDegree)), u);
  const Factorization fac = factor_over_Q(phi_u);

  std::vector<FamilyCandidate> out;
  for (int want : {4, 8}) {
    for (const auto& fp : fac.factors) {
      if (fp.factor.degree() != want) continue;
      const IntPoly& r = fp.factor;
      std::vector<RatPoly> seen;
      for (unsigned m : kExponents) {
        RatPoly t = compute_t(u, r, m);
        if (std::find(seen.begin(), seen.end(), t) != seen.end()) continue;
        seen.push_back(t);
        FamilyCandidate c = assemble(u, r, m, std::move(t));
        if (!c.accepted() && !diagnostic) continue;
        c.report = verify_family(c.t, r, c.q, c.y);
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

std::vector<FamilyCandidate> build_families(const Zeta8Element& omega, bool diagnostic) {
  const RatPoly u = solve_u(omega).poly();
  std::vector<FamilyCandidate> out;
  for (const auto& n : normalize_all(u)) {
    for (auto& c : build_families(to_rat(n.u), diagnostic)) {
      c.omega = omega;
      c.map = n.map;
      out.push_back(std::move(c));
    }
  }
  return out;
}

bool ScanBox::valid() const {
  for (int i = 0; i < 4; ++i)
    if (lo[i] > hi[i]) return false;
  return max_lc_bits > 0;
}

std::uint64_t ScanBox::size() const {
  std::uint64_t n = 1;
  for (int i = 0; i < 4; ++i) n *= static_cast<std::uint64_t>(hi[i] - lo[i] + 1);
  return n;
}

ScanResult scan(const ScanBox& box, unsigned jobs) {
  if (!box.valid()) throw std::invalid_argument("scan: empty box");
  ScanResult res;
  auto& cnt = res.counters;
  const std::uint64_t n = box.size();
  cnt.omegas = n;

  // Stage 1: omega -> normalized cubics.
  enum class Kind { ok, singular, degenerate, not_normalizable };
  struct Stage1 {
    Kind kind = Kind::ok;
    Zeta8Element omega;
    std::vector<NormalizedCubic> cubics;
  };
  std::vector<Stage1> s1(n);
  parallel_for(n, jobs, [&](std::size_t idx) {
    Stage1& e = s1[idx];
    std::uint64_t rest = idx;
    for (int i = 3; i >= 0; --i) {
      const std::uint64_t w = static_cast<std::uint64_t>(box.hi[i] - box.lo[i] + 1);
      e.omega.a[i] = Rational(Integer(std::to_string(box.lo[i] + static_cast<std::int64_t>(rest % w))));
      rest /= w;
    }
    const InvariantRecord inv = invariants(e.omega);
    if (inv.d == 0) {
      e.kind = Kind::singular;
      return;
    }
    if (inv.n3 == 0) {
      e.kind = Kind::degenerate;
      return;
    }
    e.cubics = normalize_all(solve_u(e.omega).poly());
    if (e.cubics.empty()) e.kind = Kind::not_normalizable;
  });

  Integer lc_limit = 1;
  mpz_mul_2exp(lc_limit.get_mpz_t(), lc_limit.get_mpz_t(), box.max_lc_bits);

  struct Origin {
    Zeta8Element omega;
    NormalizationMap map;
  };
  std::vector<std::pair<IntPoly, Origin>> cubics;
  std::map<std::string, std::size_t> index;
  for (const auto& e : s1) {
    switch (e.kind) {
      case Kind::singular: ++cnt.singular; continue;
      case Kind::degenerate: ++cnt.degenerate; continue;
      case Kind::not_normalizable: ++cnt.not_normalizable; continue;
      case Kind::ok: break;
    }
    for (const auto& c : e.cubics) {
      if (c.u.lead() >= lc_limit) {
        ++cnt.lc_filtered;
        continue;
      }
      const std::string key = to_string(c.u);
      if (index.count(key)) continue;
      index[key] = cubics.size();
      cubics.push_back({c.u, Origin{e.omega, c.map}});
    }
  }
  cnt.distinct_cubics = cubics.size();

  // Stage 2: families per distinct cubic.
  std::vector<std::vector<FamilyCandidate>> s2(cubics.size());
  parallel_for(cubics.size(), jobs, [&](std::size_t i) { s2[i] = build_families(to_rat(cubics[i].first), true); });

  std::vector<FamilyCandidate> all;
  for (std::size_t i = 0; i < cubics.size(); ++i) {
    if (s2[i].empty()) {
      ++cnt.no_usable_factor;
      continue;
    }
    bool any = false;
    for (auto& c : s2[i]) {
      if (!c.accepted()) {
        ++cnt.rejected_pairs;
        continue;
      }
      any = true;
      c.omega = cubics[i].second.omega;
      c.map = cubics[i].second.map;
      all.push_back(std::move(c));
    }
    if (!any) ++cnt.dagger;
  }

  std::stable_sort(all.begin(), all.end(), family_less);
  for (auto& c : all) {
    const bool dup = std::any_of(res.families.begin(), res.families.end(),
                                 [&](const FamilyCandidate& f) { return f.r == c.r && f.t == c.t; });
    if (dup) {
      ++cnt.duplicate_families;
      continue;
    }
    res.families.push_back(std::move(c));
  }
  return res;
}

}  // namespace pfc
