#include "pfc/serialize.hpp"

#include <cstdio>

namespace pfc {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw std::invalid_argument(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Integer integer_field(const Json& j, const char* key) {
  const std::string s = string_field(j, key);
  Integer v;
  if (s.empty() || v.set_str(s, 10) != 0) throw std::invalid_argument(std::string("field '") + key + "' is not an integer");
  return v;
}

}  // namespace

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

Json to_json(const NormalizationMap& m) {
  return Json{{"scale", m.scale.get_str()}, {"shift", m.shift.get_str()}, {"sign", m.sign}};
}

Json to_json(const PrimeRepresentation& p) {
  Json classes = Json::array();
  for (const auto& c : p.integral_classes) classes.push_back(c.get_str());
  return Json{{"ok", p.ok()},
              {"irreducible", p.irreducible},
              {"positive_lead", p.positive_lead},
              {"integral_somewhere", p.integral_somewhere},
              {"coprime_values", p.coprime_values},
              {"integrality_modulus", p.integrality_modulus.get_str()},
              {"integral_classes", classes},
              {"value_gcd", p.value_gcd.get_str()},
              {"diagnosis", p.diagnosis()}};
}

Json to_json(const FamilyReport& r) {
  return Json{{"ok", r.ok()},
              {"q_power_represents_primes", r.q_power_represents_primes},
              {"q_exponent", r.q_exponent},
              {"r_represents_primes", r.r_represents_primes},
              {"r_cofactor", r.r_cofactor.get_str()},
              {"r_divides_q_plus_1_minus_t", r.r_divides_q_plus_1_minus_t},
              {"r_divides_phi8_t_minus_1", r.r_divides_phi8_t_minus_1},
              {"cm_identity", r.cm_identity}};
}

Json to_json(const FamilyCandidate& c) {
  Json j;
  j["omega"] = c.omega ? Json(to_string(*c.omega)) : Json(nullptr);
  j["map"] = c.map ? to_json(*c.map) : Json(nullptr);
  j["u"] = to_string(c.u);
  j["r"] = to_string(c.r);
  j["m"] = c.m;
  j["t"] = to_string(c.t);
  j["y"] = to_string(c.y);
  j["q"] = to_string(c.q);
  j["rho"] = c.rho.get_str();
  j["k"] = kEmbeddingDegree;
  j["D"] = kDiscriminant;
  j["status"] = Json{{"accepted", c.accepted()},
                     {"reason", c.reason()},
                     {"r", to_json(c.r_status)},
                     {"q", to_json(c.q_status)},
                     {"family", to_json(c.report)}};
  return j;
}

Json to_json(const ScanCounters& c) {
  return Json{{"omegas", c.omegas},
              {"singular_d0", c.singular},
              {"degenerate_n3_0", c.degenerate},
              {"not_normalizable", c.not_normalizable},
              {"lc_filtered", c.lc_filtered},
              {"distinct_cubics", c.distinct_cubics},
              {"no_usable_factor", c.no_usable_factor},
              {"rejected_pairs", c.rejected_pairs},
              {"dagger", c.dagger},
              {"duplicate_families", c.duplicate_families}};
}

Json to_json(const CurveInstance& inst) {
  return Json{{"x0", inst.x0.get_str()},
              {"q", inst.q.get_str()},
              {"r", inst.r.get_str()},
              {"t", inst.t.get_str()},
              {"y", inst.y.get_str()},
              {"a", inst.a.get_str()},
              {"order", inst.order.get_str()},
              {"rho_e", fixed4(inst.rho_e)},
              {"lg_q", fixed4(inst.q > 0 ? lg(inst.q) : 0.0)},
              {"lg_r", fixed4(inst.r > 0 ? lg(inst.r) : 0.0)},
              {"hw_t", inst.hw_t},
              {"hw_r", inst.hw_r}};
}

Json to_json(const Transcript& t) {
  Json checks = Json::array();
  for (const auto& c : t.checks)
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"informational", c.informational}, {"detail", c.detail}});
  return Json{{"ok", t.ok()}, {"checks", checks}};
}

FamilyCandidate family_from_json(const Json& j) {
  try {
    const RatPoly u = parse_ratpoly(string_field(j, "u"));
    const IntPoly r = parse_intpoly(string_field(j, "r"));
    const Json& mj = field(j, "m");
    if (!mj.is_number_unsigned()) throw std::invalid_argument("field 'm' must be a non-negative integer");
    FamilyCandidate c = make_family(u, r, mj.get<unsigned>());
    for (const char* key : {"t", "y", "q"}) {
      if (!j.contains(key)) continue;
      const RatPoly stored = parse_ratpoly(string_field(j, key));
      const RatPoly& mine = key[0] == 't' ? c.t : key[0] == 'y' ? c.y : c.q;
      if (stored != mine) throw std::invalid_argument(std::string("field '") + key + "' disagrees with u, r, m");
    }
    if (j.contains("omega") && j.at("omega").is_string()) c.omega = parse_zeta8(j.at("omega").get<std::string>());
    return c;
  } catch (const PolyParseError& e) {
    throw std::invalid_argument(e.what());
  }
}

CurveInstance instance_from_json(const Json& j) {
  CurveInstance inst;
  inst.x0 = j.contains("x0") ? integer_field(j, "x0") : Integer(0);
  inst.q = integer_field(j, "q");
  inst.r = integer_field(j, "r");
  inst.t = integer_field(j, "t");
  if (j.contains("y")) {
    inst.y = integer_field(j, "y");
  } else {
    // y = isqrt(4q - t^2) when only q and t are given; a non-square is left
    // for the cm_identity check to report.
    const Integer d = 4 * inst.q - inst.t * inst.t;
    if (d > 0) mpz_sqrt(inst.y.get_mpz_t(), d.get_mpz_t());
  }
  inst.a = integer_field(j, "a");
  complete(inst);
  if (j.contains("order")) inst.order = integer_field(j, "order");
  return inst;
}

}  // namespace pfc
