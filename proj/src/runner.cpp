#include "segre/runner.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <optional>

#include "segre/error.hpp"
#include "segre/properties.hpp"

namespace segre {

namespace {

const char* kVersion = "segre-kit 1.0.0";

struct NumericEntry {
  std::string kind;
  std::vector<Scalar> point;
  int degree = 0;
  double radius = 0;
  MassEstimate est;
  bool integral = false;  // the estimate must be an integer up to 0.25
  long rounded = 0;
};

std::optional<std::vector<double>> real_point(const std::vector<Scalar>& p) {
  std::vector<double> out;
  for (const auto& s : p) {
    if (!s.is_real()) return std::nullopt;
    out.push_back(s.re().get_d());
  }
  return out;
}

// Polydisk radius around p that excludes coordinate hyperplanes not through p.
double local_radius(const std::vector<double>& p, double R) {
  for (double v : p)
    if (v != 0) R = std::min(R, 0.5 * std::abs(v));
  return R;
}

std::string pt_text(const std::vector<Scalar>& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].str();
  return s + ")";
}

json entry_to_json(const NumericEntry& e) {
  json j{{"kind", e.kind}, {"point", point_to_json(e.point)}, {"degree", e.degree}, {"radius", e.radius}};
  j["estimate"] = mass_estimate_to_json(e.est);
  if (e.integral) j["integer"] = e.rounded;
  return j;
}

void certify(NumericEntry& e) {
  e.rounded = std::lround(e.est.value);
  if (e.integral && std::abs(e.est.value - static_cast<double>(e.rounded)) >= 0.25)
    throw Error(ErrorCode::Undecided, e.kind + " at " + pt_text(e.point) + " is " + std::to_string(e.est.value) +
                                          " +- " + std::to_string(e.est.stderr_) + ", not within 0.25 of an integer");
}

class Context {
 public:
  Context(const MorphismSpec& s, const RunFlags& f) : spec(s), flags(f) {}

  const MorphismSpec& spec;
  const RunFlags& flags;

  const std::vector<std::string>& names() const { return spec.variables; }
  bool numeric_allowed() const { return !flags.skip_numeric; }

  const MorphismResult& Mg() {
    if (!mg_) {
      EngineOptions o;
      o.allow_partial = spec.allow_partial;
      try {
        mg_ = compute_Mg(spec.matrix, o);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::UnsupportedInput && std::string(e.what()).find("structure class") == std::string::npos)
          throw Error(e.code(), std::string("structure class ") +
                                    structure_class_name(classify_structure(spec.matrix)) + ": " + e.what());
        throw;
      }
    }
    return *mg_;
  }

  const MaResult& Ma() {
    if (!ma_) ma_ = compute_Ma(spec.matrix, spec.ma);
    return *ma_;
  }

  // Numeric estimates at the requested points (and Ma zeros), computed once.
  const std::vector<NumericEntry>& numeric() {
    if (!num_) num_ = compute_numeric();
    return *num_;
  }

  std::optional<MassBalance> balance() {
    const PolyMatrix& g = spec.matrix;
    if (g.nvars() != 1 || g.rows() != g.cols() || determinant(g).is_zero()) return std::nullopt;
    if (!balance_) balance_ = mass_balance_check(g, spec.reg);
    return balance_;
  }

 private:
  std::vector<NumericEntry> compute_numeric() {
    std::vector<NumericEntry> out;
    const PolyMatrix& g = spec.matrix;
    const int n = g.nvars();
    const bool square = g.rows() == g.cols();
    Polynomial det = square ? determinant(g) : Polynomial(n);
    const bool det_usable = square && !det.is_zero() && !det.is_constant();
    // det monomial: each component is a coordinate hyperplane and the polydisk mass is its multiplicity
    const bool det_integral = det_usable && (det.is_monomial() || n == 1);
    const bool diag2 = square && n == 2 && g.rows() == 2 && has_diagonal_pattern(g);
    for (const auto& p : spec.points) {
      auto c = real_point(p);
      if (!c) continue;
      double R = local_radius(*c, spec.reg.radius);
      RegConfig cfg = spec.reg;
      cfg.radius = R;
      if (det_usable) {
        NumericEntry e{"det_mass", p, 1, R, epsilon_mass({det}, 1, cfg, *c), det_integral, 0};
        certify(e);
        out.push_back(e);
      }
      if (diag2) {
        std::vector<Polynomial> ent;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            if (!g.at(i, j).is_zero()) ent.push_back(g.at(i, j));
        if (ent.size() == 2) {
          NumericEntry e{"entry_mass", p, 2, R, epsilon_mass(ent, 2, cfg, *c), true, 0};
          certify(e);
          out.push_back(e);
        }
      }
    }
    if (spec.has_task("Ma") && g.rows() == 1 && g.cols() == 2 && n == 2) {
      const MaResult& ma = Ma();
      Polynomial r1 = g.at(0, 0), r2 = g.at(0, 1);
      if (!r1.is_zero()) r1 = r1.divide(ma.common_factor);
      if (!r2.is_zero()) r2 = r2.divide(ma.common_factor);
      for (const auto& [z, count] : ma.zeros) {
        auto c = real_point(z);
        if (!c) continue;
        RegConfig cfg = spec.reg;
        cfg.radius = spec.ma.radius;
        NumericEntry e{"reduced_pair_mass", z, 2, cfg.radius, epsilon_mass({r1, r2}, 2, cfg, *c), true, 0};
        certify(e);
        out.push_back(e);
      }
    }
    return out;
  }

  std::optional<MorphismResult> mg_;
  std::optional<MaResult> ma_;
  std::optional<std::vector<NumericEntry>> num_;
  std::optional<MassBalance> balance_;
};

json cycles_json(const std::vector<GeneralizedCycle>& cs, const std::vector<std::string>& names) {
  json a = json::array();
  for (const auto& c : cs) a.push_back(cycle_to_json(c, names));
  return a;
}

const char* form_name(MetricForm w) { return metric_form_name(w); }

MetricForm form_from(const std::string& s) {
  for (auto w : {MetricForm::SegreEHat, MetricForm::ChernEHat, MetricForm::SegreFHat})
    if (s == metric_form_name(w)) return w;
  throw Error(ErrorCode::Input, "unknown metric form '" + s + "'");
}

json ma_json(const MaResult& r, const std::vector<std::string>& names) {
  json zeros = json::array();
  for (const auto& [z, c] : r.zeros) zeros.push_back({{"point", point_to_json(z)}, {"count", c}});
  return {{"Ma", cycles_json(r.Ma, names)},
          {"zeros", zeros},
          {"common_factor", Polynomial::monomial(r.common_factor).str(names)}};
}

// Exact multiplicity at p; with use_crofton the moving terms go through the numeric Lelong oracle instead.
long mult_of(const GeneralizedCycle& c, const std::vector<Scalar>& p, bool use_crofton, const RegConfig& cfg) {
  if (!use_crofton) return multiplicity_at(c, p).value;
  long total = 0;
  for (const auto& t : c.terms) {
    if (t.moving.empty() || t.omega_power > 0 || !t.fixed.contains(p)) {
      total += term_multiplicity(t, p).value;
      continue;
    }
    mpq_class v = t.coefficient * crofton_moving_multiplicity(t.moving, t.fixed, p, cfg);
    if (v.get_den() != 1) throw Error(ErrorCode::Undecided, "non-integral multiplicity");
    total += v.get_num().get_si();
  }
  return total;
}

class Verifier {
 public:
  Verifier(Context& ctx, std::vector<Check>& checks, const std::string& prefix)
      : ctx_(ctx), checks_(checks), prefix_(prefix) {}

  void run(const json& expect) {
    for (auto it = expect.begin(); it != expect.end(); ++it) {
      const std::string& key = it.key();
      if (key == "error") continue;  // handled by the caller
      try {
        dispatch(key, *it);
      } catch (const Error& e) {
        add(key, *it, std::string(error_code_name(e.code())) + ": " + e.what(), false);
      }
    }
  }

 private:
  void add(const std::string& name, json expected, json got, bool pass, bool skipped = false) {
    checks_.push_back({prefix_ + name, std::move(expected), std::move(got), pass, skipped});
  }
  bool skip_numeric(const std::string& name, const json& expected) {
    if (ctx_.numeric_allowed()) return false;
    add(name, expected, "skipped (numeric)", true, true);
    return true;
  }

  void dispatch(const std::string& key, const json& v) {
    const auto& names = ctx_.names();
    if (key == "structure") {
      std::string got = structure_class_name(classify_structure(ctx_.spec.matrix));
      add(key, v, got, got == v.get<std::string>());
    } else if (key == "Mg" || key == "ring_M") {
      const auto& res = ctx_.Mg();
      const auto& list = key == "Mg" ? res.M : res.ring_M;
      for (auto it = v.begin(); it != v.end(); ++it) {
        size_t k = std::stoul(it.key());
        std::string got = k < list.size() ? list[k].str(names) : "<missing>";
        if (key == "Mg" && std::find(res.unresolved.begin(), res.unresolved.end(), static_cast<int>(k)) !=
                               res.unresolved.end())
          got = "<unresolved>";
        add(key + "[" + it.key() + "]", *it, got, got == it->get<std::string>());
      }
    } else if (key == "unresolved") {
      const auto& res = ctx_.Mg();
      for (auto it = v.begin(); it != v.end(); ++it) {
        int k = std::stoi(it.key());
        std::string got = "<resolved>";
        for (size_t i = 0; i < res.unresolved.size(); ++i)
          if (res.unresolved[i] == k) got = res.unresolved_reason[i];
        add("unresolved[" + it.key() + "]", *it, got, got.find(it->get<std::string>()) != std::string::npos);
      }
    } else if (key == "segre") {
      const auto& res = ctx_.Mg();
      for (const auto& e : v) {
        auto p = point_from_json(e.at("point"));
        auto got = segre_numbers(res, p).numbers;
        add("segre" + pt_text(p), e.at("numbers"), got, json(got) == e.at("numbers"));
      }
    } else if (key == "distinguished") {
      auto d = distinguished_varieties(ctx_.Mg());
      json got = json::array();
      for (const auto& x : d)
        got.push_back({{"degree", x.degree}, {"variety", x.variety.str(names)}, {"coefficient", rational_str(x.coefficient)}});
      add(key, v, got, got == v);
    } else if (key == "multiplicity") {
      for (const auto& e : v) {
        int k = e.at("degree").get<int>();
        auto p = point_from_json(e.at("point"));
        std::string method = e.value("method", "exact");
        std::string name = "multiplicity[M_" + std::to_string(k) + pt_text(p) + "," + method + "]";
        if (method == "crofton" && skip_numeric(name, e.at("value"))) continue;
        const auto& res = ctx_.Mg();
        long got = mult_of(res.M.at(k), p, method == "crofton", ctx_.spec.reg);
        add(name, e.at("value"), got, got == e.at("value").get<long>());
      }
    } else if (key == "Ma") {
      const auto& ma = ctx_.Ma();
      for (auto it = v.begin(); it != v.end(); ++it) {
        size_t k = std::stoul(it.key());
        std::string got = k < ma.Ma.size() ? ma.Ma[k].str(names) : "<missing>";
        add("Ma[" + it.key() + "]", *it, got, got == it->get<std::string>());
      }
    } else if (key == "Ma_zeros") {
      json got = json::array();
      for (const auto& [z, c] : ctx_.Ma().zeros) got.push_back({{"point", point_to_json(z)}, {"count", c}});
      add(key, v, got, got == v);
    } else if (key == "singular_metrics") {
      for (auto it = v.begin(); it != v.end(); ++it) {
        MetricFormResult r = singular_metric_forms(ctx_.spec.matrix, form_from(it.key()));
        for (auto jt = it->begin(); jt != it->end(); ++jt) {
          size_t k = std::stoul(jt.key());
          std::string got = k < r.parts.size() ? r.parts[k].str(names) : "<missing>";
          add(it.key() + "[" + jt.key() + "]", *jt, got, got == jt->get<std::string>());
        }
      }
    } else if (key == "properties") {
      const auto& res = ctx_.Mg();
      PointList pts = property_points(ctx_.spec.matrix.nvars(), ctx_.spec.points);
      for (const auto& pn : v) {
        PropertyResult pr = run_property(pn.get<std::string>(), ctx_.spec.matrix, res, pts, ctx_.spec.reg.seed);
        add("property:" + pr.name, "holds", pr.pass ? "holds" : pr.detail, pr.pass);
      }
    } else if (key == "same_as") {
      std::vector<std::vector<std::string>> text;
      for (const auto& row : v.at("matrix")) text.push_back(row.get<std::vector<std::string>>());
      PolyMatrix other = parse_matrix(text, ctx_.names());
      MorphismResult a = ctx_.Mg(), b = compute_Mg(other);
      PointList pts = property_points(other.nvars(), ctx_.spec.points);
      json diffs = json::array();
      for (const auto& p : pts) {
        auto x = segre_numbers(a, p).numbers, y = segre_numbers(b, p).numbers;
        if (x != y) diffs.push_back({{"point", point_to_json(p)}, {"this", x}, {"other", y}});
      }
      add("same_as:segre", "identical at " + std::to_string(pts.size()) + " points",
          diffs.empty() ? json("identical at " + std::to_string(pts.size()) + " points") : diffs, diffs.empty());
      json da = distinguished_to_json(distinguished_varieties(a), names);
      json db = distinguished_to_json(distinguished_varieties(b), names);
      add("same_as:distinguished", db, da, da == db);
    } else if (key == "mass_balance") {
      if (skip_numeric(key, v)) return;
      auto mb = ctx_.balance();
      if (!mb) throw Error(ErrorCode::Input, "mass balance needs a square matrix over C^1 with det g not identically 0");
      json got{{"det_count", mb->det_count}, {"numeric_mass", mb->numeric_mass}, {"stderr", mb->stderr_}};
      add(key, v, got, mb->pass && mb->det_count == v.at("det_count").get<long>());
    } else if (key == "epsilon_mass") {
      for (const auto& e : v) {
        std::vector<Polynomial> G;
        for (const auto& t : e.at("tuple")) G.push_back(parse_polynomial(t.get<std::string>(), names));
        int k = e.at("k").get<int>();
        double want = e.at("value").get<double>(), tol = e.value("rel_tol", 0.02);
        std::string name = "epsilon_mass[k=" + std::to_string(k) + "]";
        if (skip_numeric(name, e)) continue;
        MassEstimate m = epsilon_mass(G, k, ctx_.spec.reg);
        MassEstimate again = epsilon_mass(G, k, ctx_.spec.reg);
        bool pass = std::abs(m.value - want) <= tol * std::abs(want) && again.value == m.value;
        add(name, e, mass_estimate_to_json(m), pass);
      }
    } else if (key == "oracle_agreement") {
      for (const auto& e : v) {
        Polynomial f1 = parse_polynomial(e.at("pair")[0].get<std::string>(), names);
        Polynomial f2 = parse_polynomial(e.at("pair")[1].get<std::string>(), names);
        long want = e.at("value").get<long>();
        std::string name = "oracle_agreement[" + f1.str(names) + "," + f2.str(names) + "]";
        if (skip_numeric(name, e)) continue;
        long pc = perturbation_root_count(f1, f2, e.value("radius", 0.5), 5, ctx_.spec.reg.seed);
        MassEstimate m = epsilon_mass({f1, f2}, 2, ctx_.spec.reg);
        bool pass = pc == want && std::lround(m.value) == want &&
                    std::abs(m.value - static_cast<double>(pc)) <= 0.05 * static_cast<double>(pc);
        add(name, want, json{{"perturbation", pc}, {"epsilon_mass", m.value}, {"stderr", m.stderr_}}, pass);
      }
    } else if (key == "comparison") {
      if (skip_numeric(key, v)) return;
      // every numeric estimate with an exact counterpart must agree
      bool all = true;
      json got = json::array();
      for (const auto& e : ctx_.numeric()) {
        if (!e.integral || e.kind == "reduced_pair_mass") continue;
        long exact = multiplicity_at(ctx_.Mg().M.at(e.degree), e.point).value;
        all = all && exact == e.rounded;
        got.push_back({{"point", point_to_json(e.point)}, {"degree", e.degree}, {"exact", exact}, {"numeric", e.rounded}});
      }
      add(key, v, got, all);
    } else {
      throw Error(ErrorCode::Input, "unknown expectation '" + key + "'");
    }
  }

  Context& ctx_;
  std::vector<Check>& checks_;
  std::string prefix_;
};

int checks_exit(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return 1;
  return 0;
}

json checks_json(const std::vector<Check>& checks) {
  json a = json::array();
  for (const auto& c : checks) a.push_back(check_to_json(c));
  return a;
}

json input_echo(const MorphismSpec& s) {
  json j = s.source;
  j["engine"] = engine_choice_name(s.engine);
  j["reg"] = {{"samples", s.reg.samples},
              {"seed", s.reg.seed},
              {"radius", s.reg.radius},
              {"epsilon_schedule", s.reg.epsilon_schedule},
              {"extrapolation", s.reg.extrapolation == Extrapolation::Richardson ? "richardson" : "none"}};
  return j;
}

// Body of run_spec; errors propagate to the caller.
void run_tasks(Context& ctx, json& results, std::vector<Check>& checks, const std::string& prefix) {
  const MorphismSpec& spec = ctx.spec;
  const auto& names = spec.variables;
  const bool exact = spec.engine != EngineChoice::Numeric;
  const bool numeric = spec.engine != EngineChoice::Exact && ctx.numeric_allowed();
  results["structure"] = structure_class_name(classify_structure(spec.matrix));
  if (exact) {
    if (spec.has_task("Mg")) results["Mg"] = morphism_result_to_json(ctx.Mg(), names);
    if (spec.has_task("segre")) {
      json a = json::array();
      for (const auto& p : spec.points) a.push_back(segre_report_to_json(segre_numbers(ctx.Mg(), p), names));
      results["segre"] = a;
    }
    if (spec.has_task("distinguished"))
      results["distinguished"] = distinguished_to_json(distinguished_varieties(ctx.Mg()), names);
    if (spec.has_task("singular_metrics")) {
      json a = json::object();
      for (auto w : spec.metric_forms) {
        MetricFormResult r = singular_metric_forms(spec.matrix, w);
        a[form_name(w)] = {{"parts", cycles_json(r.parts, names)}, {"tail", r.tail}};
      }
      results["singular_metrics"] = a;
    }
  }
  if (spec.has_task("Ma")) results["Ma"] = ma_json(ctx.Ma(), names);
  if (numeric) {
    json a = json::array();
    for (const auto& e : ctx.numeric()) a.push_back(entry_to_json(e));
    json block{{"estimates", a}};
    if (auto mb = ctx.balance())
      block["mass_balance"] = {{"numeric_mass", mb->numeric_mass}, {"stderr", mb->stderr_},
                               {"det_count", mb->det_count}, {"pass", mb->pass}};
    results["numeric"] = block;
  }
  if (spec.engine == EngineChoice::Both && ctx.numeric_allowed()) {
    json cmp = json::array();
    for (const auto& e : ctx.numeric()) {
      if (!e.integral || e.kind == "reduced_pair_mass") continue;
      long ex = multiplicity_at(ctx.Mg().M.at(e.degree), e.point).value;
      bool agree = ex == e.rounded;
      cmp.push_back({{"point", point_to_json(e.point)}, {"degree", e.degree}, {"exact", ex},
                     {"numeric", e.est.value}, {"stderr", e.est.stderr_}, {"agree", agree}});
      checks.push_back({prefix + "compare:M_" + std::to_string(e.degree) + pt_text(e.point), ex, e.rounded, agree, false});
    }
    for (const auto& e : ctx.numeric()) {
      if (e.kind != "reduced_pair_mass") continue;
      long count = 0;
      for (const auto& [z, c] : ctx.Ma().zeros)
        if (z == e.point) count = c;
      bool agree = e.rounded == count && std::abs(e.est.value - count) <= 0.05 * count;
      cmp.push_back({{"point", point_to_json(e.point)}, {"degree", 2}, {"perturbation", count},
                     {"numeric", e.est.value}, {"stderr", e.est.stderr_}, {"agree", agree}});
      checks.push_back({prefix + "compare:Ma" + pt_text(e.point), count, e.rounded, agree, false});
    }
    results["comparison"] = cmp;
  }
  if (spec.has_task("verify")) {
    Verifier(ctx, checks, prefix).run(spec.expect);
    if (spec.expect.contains("error"))
      checks.push_back({prefix + "error", spec.expect["error"], "no error", false, false});
  }
}

}  // namespace

const char* version_string() { return kVersion; }

json check_to_json(const Check& c) {
  json j{{"name", c.name}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}};
  if (c.skipped) j["skipped"] = true;
  return j;
}

std::string check_diff(const Check& c) {
  return "FAIL " + c.name + "\n  expected: " + c.expected.dump() + "\n  got:      " + c.got.dump() + "\n";
}

void apply_flags(MorphismSpec& spec, const RunFlags& f) {
  if (f.engine) spec.engine = *f.engine;
  if (f.seed) spec.reg.seed = *f.seed, spec.ma.seed = *f.seed;
  if (f.samples) spec.reg.samples = *f.samples;
  if (f.epsilon_schedule) spec.reg.epsilon_schedule = *f.epsilon_schedule;
  if (f.radius) spec.reg.radius = *f.radius;
  if (f.extrapolation) spec.reg.extrapolation = *f.extrapolation;
  spec.reg.validate();
}

RunOutcome run_spec(MorphismSpec spec, const RunFlags& flags) {
  apply_flags(spec, flags);
  RunOutcome out;
  out.report["version"] = kVersion;
  out.report["seed"] = spec.reg.seed;
  out.report["input"] = input_echo(spec);
  Context ctx(spec, flags);
  json results = json::object();
  try {
    run_tasks(ctx, results, out.checks, "");
  } catch (const Error& e) {
    std::string code = error_code_name(e.code());
    out.report["results"] = results;
    out.report["error"] = {{"code", code}, {"message", e.what()}};
    if (spec.has_task("verify") && spec.expect.contains("error")) {
      bool pass = spec.expect["error"].get<std::string>() == code;
      out.checks.push_back({"error", spec.expect["error"], code + ": " + e.what(), pass, false});
      out.report["checks"] = checks_json(out.checks);
      out.exit_code = checks_exit(out.checks);
      return out;
    }
    out.exit_code = exit_code_for(e.code());
    out.message = code + ": " + e.what();
    return out;
  }
  out.report["results"] = results;
  out.report["checks"] = checks_json(out.checks);
  out.exit_code = checks_exit(out.checks);
  for (const auto& c : out.checks)
    if (!c.pass) out.message += check_diff(c);
  return out;
}

RunOutcome run_mass(MorphismSpec spec, const RunFlags& flags) {
  apply_flags(spec, flags);
  RunFlags f = flags;
  f.skip_numeric = false;
  RunOutcome out;
  out.report["version"] = kVersion;
  out.report["seed"] = spec.reg.seed;
  out.report["input"] = input_echo(spec);
  Context ctx(spec, f);
  try {
    json a = json::array();
    for (const auto& e : ctx.numeric()) a.push_back(entry_to_json(e));
    out.report["masses"] = a;
    if (auto mb = ctx.balance())
      out.report["mass_balance"] = {{"numeric_mass", mb->numeric_mass}, {"stderr", mb->stderr_},
                                    {"det_count", mb->det_count}, {"pass", mb->pass}};
    if (a.empty() && !out.report.contains("mass_balance"))
      throw Error(ErrorCode::UnsupportedInput, "no numeric mass applies: give real points, or a square matrix over C^1");
  } catch (const Error& e) {
    out.report["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}};
    out.exit_code = exit_code_for(e.code());
    out.message = std::string(error_code_name(e.code())) + ": " + e.what();
    return out;
  }
  if (out.report.contains("mass_balance") && !out.report["mass_balance"]["pass"].get<bool>()) {
    out.exit_code = 1;
    out.message = "mass balance failed";
  }
  return out;
}

RunOutcome run_golden(const std::string& dir, const RunFlags& flags) {
  namespace fs = std::filesystem;
  auto t0 = std::chrono::steady_clock::now();
  RunOutcome out;
  out.report["version"] = kVersion;
  std::vector<fs::path> files;
  if (!fs::is_directory(dir)) throw Error(ErrorCode::Input, "fixture directory '" + dir + "' not found");
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw Error(ErrorCode::Input, "no fixtures in '" + dir + "'");
  json fixtures = json::array();
  for (const auto& path : files) {
    std::string name = path.stem().string();
    auto f0 = std::chrono::steady_clock::now();
    size_t before = out.checks.size();
    try {
      MorphismSpec spec = load_spec(path.string());
      if (!spec.has_task("verify")) spec.tasks.push_back("verify");
      RunOutcome r = run_spec(spec, flags);
      for (auto& c : r.checks) {
        c.name = name + ":" + c.name;
        out.checks.push_back(c);
      }
      if (r.report.contains("error") && r.checks.empty())
        out.checks.push_back({name + ":run", "success", r.message, false, false});
    } catch (const ParseError& e) {
      out.checks.push_back({name + ":parse", "valid fixture", e.what(), false, false});
    } catch (const Error& e) {
      out.checks.push_back({name + ":run", "success", std::string(error_code_name(e.code())) + ": " + e.what(), false, false});
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - f0).count();
    long failed = 0;
    for (size_t i = before; i < out.checks.size(); ++i) failed += !out.checks[i].pass;
    fixtures.push_back({{"fixture", name}, {"checks", out.checks.size() - before}, {"failed", failed}, {"seconds", secs}});
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  double budget = flags.skip_numeric ? 10.0 : 300.0;
  out.checks.push_back({"runtime_budget", "< " + std::to_string(static_cast<int>(budget)) + " s",
                        std::to_string(total) + " s", total < budget, false});
  out.report["fixtures"] = fixtures;
  out.report["checks"] = checks_json(out.checks);
  out.report["seconds"] = total;
  out.exit_code = checks_exit(out.checks);
  for (const auto& c : out.checks)
    if (!c.pass) out.message += check_diff(c);
  return out;
}

}  // namespace segre
