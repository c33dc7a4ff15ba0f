#include "segre/spec.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "segre/error.hpp"

namespace segre {

namespace {

const std::vector<std::string> kTasks{"Mg", "segre", "distinguished", "Ma", "singular_metrics", "verify"};
const std::vector<std::string> kKeys{"name", "variables", "matrix", "engine", "points",
                                     "tasks", "reg", "options", "expect"};

std::pair<int, int> line_col(const std::string& text, size_t offset) {
  int line = 1, col = 1;
  for (size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Locates the JSON value for a key path like ("matrix", "x1^2") by text search; falls back to the key.
class Locator {
 public:
  explicit Locator(const std::string& text) : text_(text) {}

  size_t key(const std::string& k) const {
    size_t p = text_.find("\"" + k + "\"");
    return p == std::string::npos ? 0 : p;
  }
  size_t string_after(const std::string& s, size_t from) const {
    size_t p = text_.find("\"" + s + "\"", from);
    return p == std::string::npos ? from : p + 1;
  }
  [[noreturn]] void fail(const std::string& msg, size_t offset) const {
    auto [l, c] = line_col(text_, offset);
    throw ParseError(msg + " (line " + std::to_string(l) + ", column " + std::to_string(c) + ")", l, c);
  }

 private:
  const std::string& text_;
};

std::string entry_text(const json& v, const Locator& loc, size_t at) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  loc.fail("matrix entries must be polynomial strings", at);
}

}  // namespace

const char* engine_choice_name(EngineChoice e) {
  switch (e) {
    case EngineChoice::Exact: return "exact";
    case EngineChoice::Numeric: return "numeric";
    case EngineChoice::Both: return "both";
  }
  return "?";
}

EngineChoice parse_engine_choice(const std::string& s) {
  if (s == "exact") return EngineChoice::Exact;
  if (s == "numeric") return EngineChoice::Numeric;
  if (s == "both") return EngineChoice::Both;
  throw Error(ErrorCode::Input, "engine must be exact, numeric or both (got '" + s + "')");
}

bool MorphismSpec::has_task(const std::string& t) const {
  return std::find(tasks.begin(), tasks.end(), t) != tasks.end();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Input, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MorphismSpec parse_spec(const std::string& text) {
  Locator loc(text);
  MorphismSpec s;
  try {
    s.source = json::parse(text);
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    loc.fail("malformed document: " + msg.substr(msg.find(':') + 2), e.byte > 0 ? e.byte - 1 : 0);
  }
  const json& d = s.source;
  if (!d.is_object()) loc.fail("top level must be an object", 0);
  for (auto it = d.begin(); it != d.end(); ++it)
    if (std::find(kKeys.begin(), kKeys.end(), it.key()) == kKeys.end())
      loc.fail("unknown key '" + it.key() + "'", loc.key(it.key()));

  try {
    if (d.contains("name")) s.name = d["name"].get<std::string>();
    if (!d.contains("variables") || !d["variables"].is_array() || d["variables"].empty())
      loc.fail("'variables' must be a non-empty list of names", loc.key("variables"));
    for (const auto& v : d["variables"]) {
      if (!v.is_string()) loc.fail("variable names must be strings", loc.key("variables"));
      s.variables.push_back(v.get<std::string>());
    }
    if (s.variables.size() > static_cast<size_t>(kMaxBaseVars))
      loc.fail("at most " + std::to_string(kMaxBaseVars) + " variables", loc.key("variables"));

    if (!d.contains("matrix") || !d["matrix"].is_array() || d["matrix"].empty())
      loc.fail("'matrix' must be a non-empty list of rows", loc.key("matrix"));
    size_t cursor = loc.key("matrix");
    for (const auto& row : d["matrix"]) {
      if (!row.is_array() || row.empty()) loc.fail("each matrix row must be a non-empty list", cursor);
      std::vector<std::string> r;
      for (const auto& v : row) {
        std::string t = entry_text(v, loc, cursor);
        size_t at = v.is_string() ? loc.string_after(t, cursor) : cursor;
        try {
          parse_polynomial(t, s.variables);
        } catch (const ParseError& pe) {
          loc.fail(std::string("bad polynomial \"") + t + "\": " + pe.what(), at + pe.col() - 1);
        } catch (const Error& pe) {
          loc.fail(std::string("bad polynomial \"") + t + "\": " + pe.what(), at);
        }
        cursor = at + t.size();
        r.push_back(t);
      }
      if (!s.matrix_text.empty() && r.size() != s.matrix_text[0].size())
        loc.fail("matrix rows have different lengths", cursor);
      s.matrix_text.push_back(r);
    }
    s.matrix = parse_matrix(s.matrix_text, s.variables);

    if (d.contains("engine")) {
      try {
        s.engine = parse_engine_choice(d["engine"].get<std::string>());
      } catch (const Error& e) {
        loc.fail(e.what(), loc.key("engine"));
      }
    }

    if (d.contains("points")) {
      for (const auto& p : d["points"]) {
        std::vector<Scalar> pt;
        try {
          pt = point_from_json(p);
        } catch (const Error& e) {
          loc.fail(std::string("bad point: ") + e.what(), loc.key("points"));
        }
        if (pt.size() != s.variables.size())
          loc.fail("point has " + std::to_string(pt.size()) + " coordinates, expected " +
                       std::to_string(s.variables.size()),
                   loc.key("points"));
        s.points.push_back(pt);
      }
    }

    if (d.contains("tasks")) {
      for (const auto& t : d["tasks"]) {
        std::string name = t.get<std::string>();
        if (std::find(kTasks.begin(), kTasks.end(), name) == kTasks.end())
          loc.fail("unknown task '" + name + "'", loc.string_after(name, loc.key("tasks")) - 1);
        s.tasks.push_back(name);
      }
    } else {
      s.tasks = {"Mg", "segre", "distinguished"};
    }

    if (d.contains("reg")) {
      const json& r = d["reg"];
      for (auto it = r.begin(); it != r.end(); ++it) {
        const std::string& k = it.key();
        if (k == "samples") s.reg.samples = it->get<long>();
        else if (k == "seed") s.reg.seed = it->get<std::uint64_t>();
        else if (k == "radius") s.reg.radius = it->get<double>();
        else if (k == "epsilon_schedule") s.reg.epsilon_schedule = it->get<std::vector<double>>();
        else if (k == "extrapolation") {
          std::string e = it->get<std::string>();
          if (e == "richardson") s.reg.extrapolation = Extrapolation::Richardson;
          else if (e == "none") s.reg.extrapolation = Extrapolation::None;
          else loc.fail("extrapolation must be richardson or none", loc.key(k));
        } else if (k == "extrapolation_order") s.reg.extrapolation_order = it->get<int>();
        else if (k == "partitions") s.reg.partitions = it->get<int>();
        else if (k == "chi_thresholds") s.reg.chi_thresholds = it->get<std::pair<double, double>>();
        else loc.fail("unknown reg key '" + k + "'", loc.key(k));
      }
      try {
        s.reg.validate();
      } catch (const Error& e) {
        loc.fail(e.what(), loc.key("reg"));
      }
    }

    if (d.contains("options")) {
      const json& o = d["options"];
      for (auto it = o.begin(); it != o.end(); ++it) {
        const std::string& k = it.key();
        if (k == "allow_partial") s.allow_partial = it->get<bool>();
        else if (k == "metric_forms") {
          s.metric_forms.clear();
          for (const auto& w : *it) {
            std::string n = w.get<std::string>();
            if (n == "SEGRE_E_HAT") s.metric_forms.push_back(MetricForm::SegreEHat);
            else if (n == "CHERN_E_HAT") s.metric_forms.push_back(MetricForm::ChernEHat);
            else if (n == "SEGRE_F_HAT") s.metric_forms.push_back(MetricForm::SegreFHat);
            else loc.fail("unknown metric form '" + n + "'", loc.key(k));
          }
        } else if (k == "ma_radius") s.ma.radius = it->get<double>();
        else if (k == "candidate_zeros") {
          for (const auto& p : *it) s.ma.candidate_zeros.push_back(point_from_json(p));
        } else loc.fail("unknown option '" + k + "'", loc.key(k));
      }
    }
    s.ma.seed = s.reg.seed;
    if (d.contains("expect")) {
      if (!d["expect"].is_object()) loc.fail("'expect' must be an object", loc.key("expect"));
      s.expect = d["expect"];
    }
  } catch (const json::type_error& e) {
    std::string msg = e.what();
    loc.fail("wrong value type: " + msg.substr(msg.find(']') + 2), 0);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    loc.fail(e.what(), 0);
  }
  return s;
}

MorphismSpec load_spec(const std::string& path) { return parse_spec(read_file(path)); }

}  // namespace segre
