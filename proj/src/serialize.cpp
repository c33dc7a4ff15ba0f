#include "segre/serialize.hpp"

#include "segre/error.hpp"

namespace segre {

namespace {

VarietyKind kind_from_name(const std::string& s) {
  for (auto k : {VarietyKind::CoordinateSubspace, VarietyKind::MonomialDivisor, VarietyKind::Point,
                 VarietyKind::WholeSpace, VarietyKind::FiberHypersurface})
    if (s == variety_kind_name(k)) return k;
  throw Error(ErrorCode::Input, "unknown variety kind '" + s + "'");
}

Space space_from_name(const std::string& s) {
  if (s == "BASE") return Space::Base;
  if (s == "PROJECTIVIZATION") return Space::Projectivization;
  throw Error(ErrorCode::Input, "unknown space '" + s + "'");
}

}  // namespace

json scalar_to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) throw Error(ErrorCode::Input, "exact values must be strings such as \"3/2\"");
  return parse_scalar(j.get<std::string>());
}

json point_to_json(const std::vector<Scalar>& p) {
  json a = json::array();
  for (const auto& s : p) a.push_back(scalar_to_json(s));
  return a;
}

std::vector<Scalar> point_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::Input, "a point must be an array");
  std::vector<Scalar> p;
  for (const auto& v : j) p.push_back(scalar_from_json(v));
  return p;
}

json variety_to_json(const VarietyRef& v, const std::vector<std::string>& names) {
  json j;
  j["kind"] = variety_kind_name(v.kind);
  j["nvars"] = v.nvars;
  json eq = json::array();
  for (const auto& e : v.equations) eq.push_back(e.str(names));
  j["equations"] = eq;
  j["point"] = point_to_json(v.point);
  j["text"] = v.str(names);
  return j;
}

VarietyRef variety_from_json(const json& j, const std::vector<std::string>& names) {
  VarietyRef v;
  v.kind = kind_from_name(j.at("kind").get<std::string>());
  v.nvars = j.at("nvars").get<int>();
  for (const auto& e : j.at("equations")) v.equations.push_back(parse_polynomial(e.get<std::string>(), names));
  v.point = point_from_json(j.at("point"));
  return v;
}

json cycle_to_json(const GeneralizedCycle& c, const std::vector<std::string>& base_names) {
  const auto names = c.names(base_names);
  json j;
  j["space"] = c.space == Space::Base ? "BASE" : "PROJECTIVIZATION";
  j["n"] = c.n;
  j["r"] = c.r;
  j["degree"] = c.degree;
  json terms = json::array();
  for (const auto& t : c.terms) {
    json tj;
    tj["coefficient"] = rational_str(t.coefficient);
    tj["fixed"] = variety_to_json(t.fixed, names);
    tj["omega_power"] = t.omega_power;
    json mv = json::array();
    for (const auto& f : t.moving) {
      json args = json::array();
      for (const auto& a : f.args) args.push_back(a.str(names));
      mv.push_back({{"args", args}, {"power", f.power}});
    }
    tj["moving"] = mv;
    terms.push_back(tj);
  }
  j["terms"] = terms;
  j["text"] = c.str(base_names);
  return j;
}

GeneralizedCycle cycle_from_json(const json& j, const std::vector<std::string>& base_names) {
  GeneralizedCycle c(space_from_name(j.at("space").get<std::string>()), j.at("n").get<int>(), j.at("r").get<int>(),
                     j.at("degree").get<int>());
  const auto names = c.names(base_names);
  for (const auto& tj : j.at("terms")) {
    CycleTerm t;
    t.coefficient = parse_rational(tj.at("coefficient").get<std::string>());
    t.fixed = variety_from_json(tj.at("fixed"), names);
    t.omega_power = tj.at("omega_power").get<int>();
    for (const auto& fj : tj.at("moving")) {
      MovingFactor f;
      for (const auto& a : fj.at("args")) f.args.push_back(parse_polynomial(a.get<std::string>(), names));
      f.power = fj.at("power").get<int>();
      t.moving.push_back(f);
    }
    c.terms.push_back(t);
  }
  return c;
}

json distinguished_to_json(const std::vector<Distinguished>& d, const std::vector<std::string>& names) {
  json a = json::array();
  for (const auto& x : d)
    a.push_back({{"degree", x.degree},
                  {"variety", variety_to_json(x.variety, names)},
                  {"coefficient", rational_str(x.coefficient)}});
  return a;
}

std::vector<Distinguished> distinguished_from_json(const json& j, const std::vector<std::string>& names) {
  std::vector<Distinguished> out;
  for (const auto& x : j)
    out.push_back({x.at("degree").get<int>(), variety_from_json(x.at("variety"), names),
                   parse_rational(x.at("coefficient").get<std::string>())});
  return out;
}

json segre_report_to_json(const SegreReport& r, const std::vector<std::string>& names) {
  json j;
  j["point"] = point_to_json(r.point);
  j["numbers"] = r.numbers;
  json prov = json::array();
  for (auto p : r.provenance) prov.push_back(provenance_name(p));
  j["provenance"] = prov;
  j["distinguished"] = distinguished_to_json(r.distinguished, names);
  return j;
}

SegreReport segre_report_from_json(const json& j, const std::vector<std::string>& names) {
  SegreReport r;
  r.point = point_from_json(j.at("point"));
  r.numbers = j.at("numbers").get<std::vector<long>>();
  for (const auto& p : j.at("provenance"))
    r.provenance.push_back(p.get<std::string>() == "EXACT" ? Provenance::Exact : Provenance::Oracle);
  r.distinguished = distinguished_from_json(j.at("distinguished"), names);
  return r;
}

json mass_estimate_to_json(const MassEstimate& m) {
  json per = json::array();
  for (const auto& [e, v] : m.per_epsilon) per.push_back({{"epsilon", e}, {"value", v}});
  return {{"value", m.value},
          {"stderr", m.stderr_},
          {"per_epsilon", per},
          {"extrapolated", m.extrapolated},
          {"asymptotic", m.asymptotic_flag}};
}

MassEstimate mass_estimate_from_json(const json& j) {
  MassEstimate m;
  m.value = j.at("value").get<double>();
  m.stderr_ = j.at("stderr").get<double>();
  for (const auto& p : j.at("per_epsilon")) m.per_epsilon.push_back({p.at("epsilon"), p.at("value")});
  m.extrapolated = j.at("extrapolated").get<bool>();
  m.asymptotic_flag = j.at("asymptotic").get<bool>();
  return m;
}

json morphism_result_to_json(const MorphismResult& r, const std::vector<std::string>& names) {
  json j;
  j["structure"] = structure_class_name(r.structure);
  j["route"] = r.route;
  j["engine"] = r.engine;
  j["generically_injective"] = r.generically_injective;
  j["Z"] = describe_Z(r, names);
  json M = json::array();
  for (const auto& c : r.M) M.push_back(cycle_to_json(c, names));
  j["M"] = M;
  json ring = json::array();
  for (const auto& c : r.ring_M) ring.push_back(cycle_to_json(c, names));
  j["ring_M"] = ring;
  json un = json::array();
  for (size_t i = 0; i < r.unresolved.size(); ++i)
    un.push_back({{"degree", r.unresolved[i]},
                  {"reason", i < r.unresolved_reason.size() ? r.unresolved_reason[i] : ""}});
  j["unresolved"] = un;
  return j;
}

}  // namespace segre
