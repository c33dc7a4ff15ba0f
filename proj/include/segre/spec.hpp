#pragma once
#include <string>
#include <vector>

#include "segre/engine.hpp"
#include "segre/numeric.hpp"
#include "segre/serialize.hpp"

namespace segre {

enum class EngineChoice { Exact, Numeric, Both };
const char* engine_choice_name(EngineChoice e);
EngineChoice parse_engine_choice(const std::string& s);

struct MorphismSpec {
  std::string name;
  std::vector<std::string> variables;
  std::vector<std::vector<std::string>> matrix_text;
  PolyMatrix matrix;
  EngineChoice engine = EngineChoice::Exact;
  std::vector<std::vector<Scalar>> points;
  std::vector<std::string> tasks;  // Mg, segre, distinguished, Ma, singular_metrics, verify
  RegConfig reg;
  bool allow_partial = false;
  std::vector<MetricForm> metric_forms{MetricForm::SegreEHat, MetricForm::ChernEHat, MetricForm::SegreFHat};
  MaOptions ma;
  json expect = json::object();
  json source;  // parsed document, echoed into reports

  bool has_task(const std::string& t) const;
};

// Errors carry the 1-based line and column of the offending text.
MorphismSpec parse_spec(const std::string& text);
MorphismSpec load_spec(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace segre
