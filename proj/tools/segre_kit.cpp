#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "segre/error.hpp"
#include "segre/runner.hpp"

using namespace segre;

namespace {

std::vector<double> parse_schedule(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Input, "bad epsilon value '" + item + "'");
    }
  }
  return out;
}

int emit(const RunOutcome& r, const std::string& out_path) {
  std::string text = r.report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "cannot write '" << out_path << "'\n";
      return 2;
    }
    f << text;
  }
  if (!r.message.empty()) std::cerr << r.message << (r.message.back() == '\n' ? "" : "\n");
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Segre numbers and residue currents of monomial-structured morphisms"};
  app.require_subcommand(1);

  std::string engine, eps, extrap, out_path, fixtures = SEGRE_FIXTURE_DIR;
  std::uint64_t seed = 0;
  long samples = 0;
  double radius = 0;
  bool skip_numeric = false;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--engine", engine, "exact, numeric or both")->check(CLI::IsMember({"exact", "numeric", "both"}));
    c->add_option("--seed", seed, "RNG seed");
    c->add_option("--samples", samples, "QMC samples per epsilon")->check(CLI::PositiveNumber);
    c->add_option("--epsilon-schedule", eps, "comma-separated decreasing epsilons");
    c->add_option("--radius", radius, "integration polydisk radius")->check(CLI::PositiveNumber);
    c->add_option("--extrapolation", extrap, "richardson or none")->check(CLI::IsMember({"richardson", "none"}));
    c->add_option("--out", out_path, "write the report here instead of stdout");
    c->add_flag("--skip-numeric", skip_numeric, "exact checks only");
  };

  std::string spec_path;
  auto* run = app.add_subcommand("run", "evaluate a morphism spec");
  run->add_option("spec", spec_path, "spec file")->required();
  add_common(run);
  auto* golden = app.add_subcommand("golden", "run the golden fixture suite");
  golden->add_option("--fixtures", fixtures, "fixture directory");
  add_common(golden);
  auto* mass = app.add_subcommand("mass", "numeric masses for a spec");
  mass->add_option("spec", spec_path, "spec file")->required();
  add_common(mass);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    RunFlags flags;
    if (!engine.empty()) flags.engine = parse_engine_choice(engine);
    auto* active = app.get_subcommands().front();
    if (active->count("--seed")) flags.seed = seed;
    if (samples > 0) flags.samples = samples;
    if (!eps.empty()) flags.epsilon_schedule = parse_schedule(eps);
    if (radius > 0) flags.radius = radius;
    if (!extrap.empty()) flags.extrapolation = extrap == "none" ? Extrapolation::None : Extrapolation::Richardson;
    flags.skip_numeric = skip_numeric;

    if (run->parsed()) return emit(run_spec(load_spec(spec_path), flags), out_path);
    if (mass->parsed()) return emit(run_mass(load_spec(spec_path), flags), out_path);
    RunOutcome r = run_golden(fixtures, flags);
    long failed = 0;
    for (const auto& c : r.checks) failed += !c.pass;
    int rc = emit(r, out_path);
    std::cerr << "golden: " << r.checks.size() << " checks, " << failed << " failed\n";
    return rc;
  } catch (const ParseError& e) {
    std::cerr << "PARSE_ERROR: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << error_code_name(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}
