// pfc: embedding degree 8, D = 1 curve families and instances.
//
//   pfc scan     --amin 0 --amax 2 [--max-lc-bits 10] [--jobs N]
//   pfc family   --u "82*x^3+108*x^2+54*x+9" | --omega "z+z^2"  [--all]
//   pfc instance --family-file F [--index I] | --u U --m M [--r R]
//                (--start X | --bits B) [--direction -1|1]
//   pfc verify   --in instance.json
//   pfc examples
//
// Exit codes: 0 success, 2 verification failure, 3 search budget exhausted,
// 4 configuration error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pfc/curvegen.hpp"
#include "pfc/family.hpp"
#include "pfc/serialize.hpp"
#include "pfc/zfactor.hpp"

using namespace pfc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 2;
constexpr int kExitBudget = 3;
constexpr int kExitConfig = 4;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string out;
  std::string format = "json";
  unsigned jobs = 1;
  std::uint64_t seed = kDefaultSeed;
  unsigned mr_rounds = kDefaultMrRounds;
};

void emit(const Common& c, const Json& j, const std::string& text) {
  const std::string body = c.format == "text" ? text : j.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + c.out);
  f << body;
}

Json read_json(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const Json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::array<std::int64_t, 4> coords(const std::vector<std::int64_t>& v, const char* flag) {
  if (v.size() == 1) return {v[0], v[0], v[0], v[0]};
  if (v.size() == 4) return {v[0], v[1], v[2], v[3]};
  throw ConfigError(std::string(flag) + " takes one value or four comma-separated values");
}

Json common_config(const Common& c) {
  return Json{{"seed", c.seed}, {"mr_rounds", c.mr_rounds}, {"jobs", c.jobs}, {"format", c.format}};
}

std::string family_text(const FamilyCandidate& f) {
  std::ostringstream s;
  s << "u = " << to_string(f.u) << "\n"
    << "  r = " << to_string(f.r) << "  (deg " << f.r.degree() << ")\n"
    << "  t = " << to_string(f.t) << "  (m = " << f.m << ")\n"
    << "  y = " << to_string(f.y) << "\n"
    << "  q = " << to_string(f.q) << "  (deg " << f.q.degree() << ")\n"
    << "  rho = " << f.rho.get_str() << ", " << f.reason() << (f.report.ok() ? "" : ", family checks FAIL") << "\n";
  if (f.omega) s << "  omega = " << to_string(*f.omega) << "\n";
  return s.str();
}

std::string transcript_text(const CurveInstance& inst, const Transcript& t) {
  std::ostringstream s;
  s << "x0 = " << inst.x0 << "\nq  = " << inst.q << "\nr  = " << inst.r << "\nt  = " << inst.t << "\ny  = " << inst.y
    << "\na  = " << inst.a << "\n#E = " << inst.order << "\n";
  for (const auto& c : t.checks)
    s << (c.pass ? "pass " : c.informational ? "note " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": ")
      << c.detail << (c.informational ? " (informational)" : "") << "\n";
  s << (t.ok() ? "verified\n" : "verification FAILED\n");
  return s.str();
}

// ---- scan ----------------------------------------------------------------

struct ScanArgs {
  std::vector<std::int64_t> amin{0}, amax{1};
  unsigned max_lc_bits = 10;
};

int run_scan(const ScanArgs& a, const Common& c) {
  ScanBox box;
  box.lo = coords(a.amin, "--amin");
  box.hi = coords(a.amax, "--amax");
  box.max_lc_bits = a.max_lc_bits;
  if (!box.valid()) throw ConfigError("empty scan box");
  const ScanResult res = scan(box, c.jobs);

  Json cfg = common_config(c);
  cfg["amin"] = box.lo;
  cfg["amax"] = box.hi;
  cfg["max_lc_bits"] = box.max_lc_bits;
  Json fams = Json::array();
  std::string text;
  for (const auto& f : res.families) {
    fams.push_back(to_json(f));
    text += family_text(f);
  }
  const Json counters = to_json(res.counters);
  text += "counters: " + counters.dump() + "\n";
  emit(c, Json{{"command", "scan"}, {"config", cfg}, {"counters", counters}, {"families", fams}}, text);
  return kExitOk;
}

// ---- family --------------------------------------------------------------

struct FamilyArgs {
  std::string u, omega;
  bool all = false;
};

int run_family(const FamilyArgs& a, const Common& c) {
  if (a.u.empty() == a.omega.empty()) throw ConfigError("give exactly one of --u and --omega");
  std::vector<FamilyCandidate> fams;
  try {
    if (!a.u.empty()) {
      const RatPoly u = parse_ratpoly(a.u);
      if (u.degree() != 3) throw ConfigError("--u must be a cubic");
      fams = build_families(u, a.all);
    } else {
      fams = build_families(parse_zeta8(a.omega), a.all);
    }
  } catch (const PolyParseError& e) {
    throw ConfigError(e.what());
  } catch (const SingularSystem& e) {
    throw ConfigError(e.what());
  } catch (const DegenerateCubic& e) {
    throw ConfigError(e.what());
  }
  Json cfg = common_config(c);
  cfg["u"] = a.u;
  cfg["omega"] = a.omega;
  cfg["all"] = a.all;
  Json arr = Json::array();
  std::string text;
  for (const auto& f : fams) {
    arr.push_back(to_json(f));
    text += family_text(f);
  }
  emit(c, Json{{"command", "family"}, {"config", cfg}, {"families", arr}}, text);
  return kExitOk;
}

// ---- instance ------------------------------------------------------------

struct InstanceArgs {
  std::string family_file;
  std::size_t index = 0;
  std::string u, r;
  unsigned m = 5;
  std::string start;
  unsigned bits = 0;
  int direction = 1;
  std::uint64_t budget = 1000000;
};

FamilyCandidate load_family(const InstanceArgs& a) {
  try {
    if (!a.family_file.empty()) {
      const Json j = read_json(a.family_file);
      const Json* rec = &j;
      if (j.is_object() && j.contains("families")) {
        const Json& arr = j.at("families");
        if (!arr.is_array() || a.index >= arr.size()) throw ConfigError("family index out of range");
        rec = &arr.at(a.index);
      }
      return family_from_json(*rec);
    }
    if (a.u.empty()) throw ConfigError("give --family-file or --u");
    const RatPoly u = parse_ratpoly(a.u);
    IntPoly r;
    if (!a.r.empty()) {
      r = parse_intpoly(a.r);
    } else {
      const Factorization f = factor_over_Q(compose(to_rat(cyclotomic(8)), u));
      for (const auto& fp : f.factors)
        if (fp.factor.degree() == 4) {
          r = fp.factor;
          break;
        }
      if (r.is_zero()) throw ConfigError("Phi_8(u) has no quartic factor; give --r");
    }
    return make_family(u, r, a.m);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

int run_instance(const InstanceArgs& a, const Common& c) {
  if (a.direction != 1 && a.direction != -1) throw ConfigError("--direction must be 1 or -1");
  if (a.start.empty() == (a.bits == 0)) throw ConfigError("give exactly one of --start and --bits");
  const FamilyCandidate fam = load_family(a);
  Integer start;
  if (a.bits) {
    start = start_for_bits(fam, a.bits, a.direction);
  } else if (start.set_str(a.start, 10) != 0) {
    throw ConfigError("--start is not an integer");
  }

  SearchOptions opts;
  opts.seed = c.seed;
  opts.mr_rounds = c.mr_rounds;
  opts.jobs = c.jobs;
  opts.budget = a.budget;
  const CurveInstance inst = next_instance(fam, start, a.direction, opts);
  const Transcript tr = verify_curve(inst, c.mr_rounds, c.seed);

  Json cfg = common_config(c);
  cfg["family"] = Json{{"u", to_string(fam.u)}, {"r", to_string(fam.r)}, {"m", fam.m}};
  cfg["start"] = start.get_str();
  cfg["bits"] = a.bits;
  cfg["direction"] = a.direction;
  cfg["budget"] = a.budget;
  emit(c, Json{{"command", "instance"}, {"config", cfg}, {"instance", to_json(inst)}, {"transcript", to_json(tr)}},
       transcript_text(inst, tr));
  return tr.ok() ? kExitOk : kExitVerify;
}

// ---- verify --------------------------------------------------------------

int run_verify(const std::string& in, const Common& c) {
  const Json j = read_json(in);
  CurveInstance inst;
  try {
    inst = instance_from_json(j.is_object() && j.contains("instance") ? j.at("instance") : j);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(in + ": " + e.what());
  }
  const Transcript tr = verify_curve(inst, c.mr_rounds, c.seed);
  emit(c, Json{{"command", "verify"}, {"config", common_config(c)}, {"instance", to_json(inst)},
               {"transcript", to_json(tr)}},
       transcript_text(inst, tr));
  return tr.ok() ? kExitOk : kExitVerify;
}

// ---- examples ------------------------------------------------------------

int run_examples(const Common& c) {
  // Three reference points of the lc 82 family (m = 5).
  const char* xs[] = {"24000000000010394", "6130400000000029634", "-72057594037930756"};
  const FamilyCandidate fam =
      make_family(parse_ratpoly("82*x^3+108*x^2+54*x+9"), parse_intpoly("82*x^4+108*x^3+54*x^2+12*x+1"), 5);
  SearchOptions opts;
  opts.seed = c.seed;
  opts.mr_rounds = c.mr_rounds;
  opts.jobs = c.jobs;
  opts.budget = 1;  // the point itself must be an instance

  Json arr = Json::array();
  std::string text;
  bool ok = true;
  for (const char* x : xs) {
    const Integer x0(x);
    const CurveInstance inst = next_instance(fam, x0, x0 < 0 ? -1 : 1, opts);
    const Transcript tr = verify_curve(inst, c.mr_rounds, c.seed);
    ok = ok && tr.ok() && inst.x0 == x0;
    arr.push_back(Json{{"instance", to_json(inst)}, {"transcript", to_json(tr)}});
    text += transcript_text(inst, tr) + "\n";
  }
  emit(c, Json{{"command", "examples"}, {"config", common_config(c)}, {"examples", arr}}, text);
  return ok ? kExitOk : kExitVerify;
}

void add_common(CLI::App* sub, Common& c, bool search) {
  sub->add_option("--out", c.out, "Output file (default stdout)");
  sub->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  if (search) {
    sub->add_option("--seed", c.seed, "PRNG seed");
    sub->add_option("--mr-rounds", c.mr_rounds, "Miller-Rabin rounds above 2^64")->check(CLI::Range(1u, 10000u));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Embedding degree 8, D = 1 pairing-friendly curve families"};
  app.require_subcommand(1);

  Common common;
  ScanArgs scan_args;
  FamilyArgs family_args;
  InstanceArgs inst_args;
  std::string verify_in;

  auto* scan_cmd = app.add_subcommand("scan", "Scan a box of omega for families");
  scan_cmd->add_option("--amin", scan_args.amin, "Lower bound, one value or a0,a1,a2,a3")->delimiter(',');
  scan_cmd->add_option("--amax", scan_args.amax, "Upper bound, one value or a0,a1,a2,a3")->delimiter(',');
  scan_cmd->add_option("--max-lc-bits", scan_args.max_lc_bits, "Keep families with lg lc(u) below this");
  add_common(scan_cmd, common, false);

  auto* fam_cmd = app.add_subcommand("family", "Families of one cubic u or one omega");
  fam_cmd->add_option("--u", family_args.u, "Cubic u(x)");
  fam_cmd->add_option("--omega", family_args.omega, "omega as a0+a1*z+a2*z^2+a3*z^3");
  fam_cmd->add_flag("--all", family_args.all, "Include rejected (r, m) pairs");
  add_common(fam_cmd, common, false);

  auto* inst_cmd = app.add_subcommand("instance", "Search and verify a curve instance");
  inst_cmd->add_option("--family-file", inst_args.family_file, "Family JSON (record or scan/family output)");
  inst_cmd->add_option("--index", inst_args.index, "Family index within the file");
  inst_cmd->add_option("--u", inst_args.u, "Cubic u(x)");
  inst_cmd->add_option("--r", inst_args.r, "Factor r(x) of Phi_8(u) (default: first quartic)");
  inst_cmd->add_option("--m", inst_args.m, "Exponent m in t = u^m + 1")->check(CLI::IsMember({1u, 3u, 5u, 7u}));
  inst_cmd->add_option("--start", inst_args.start, "First x to try");
  inst_cmd->add_option("--bits", inst_args.bits, "Start at the smallest |x| with r(x) >= 2^bits");
  inst_cmd->add_option("--direction", inst_args.direction, "1 or -1");
  inst_cmd->add_option("--budget", inst_args.budget, "Maximum x values examined");
  add_common(inst_cmd, common, true);

  auto* ver_cmd = app.add_subcommand("verify", "Verify a curve instance file");
  ver_cmd->add_option("--in,in", verify_in, "Instance JSON")->required();
  add_common(ver_cmd, common, true);

  auto* ex_cmd = app.add_subcommand("examples", "Rebuild and verify the three reference instances");
  add_common(ex_cmd, common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*scan_cmd) return run_scan(scan_args, common);
    if (*fam_cmd) return run_family(family_args, common);
    if (*inst_cmd) return run_instance(inst_args, common);
    if (*ver_cmd) return run_verify(verify_in, common);
    if (*ex_cmd) return run_examples(common);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const SearchBudgetExhausted& e) {
    std::cerr << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
