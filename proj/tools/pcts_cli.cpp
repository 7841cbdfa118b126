// Command-line driver: resolves a config (file, preset, flags), runs every
// seed and writes summary.csv, curve.csv and traces/seed_<n>.csv.
//
// Exit codes: 0 ok, 2 configuration error, 3 runtime error, 4 I/O error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "pcts/harness.hpp"

namespace {

enum ExitCode { kOk = 0, kConfig = 2, kRuntime = 3, kIo = 4 };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Procrastinated tree search under delayed, noisy, multi-fidelity feedback"};
  app.option_defaults()->always_capture_default(false);

  std::map<std::string, std::string> values;
  auto flag = [&](const std::string& name, const std::string& help) {
    app.add_option("--" + name, values[name], help);
  };
  flag("benchmark", "hartmann3 | hartmann6 | currin | borehole | branin | schwefel | quadratic1d");
  flag("algo", "pcts | mfpoo | wait_and_act | random");
  flag("policy", "ucb1 | ucb1-sigma | ucbv");
  flag("sigma2", "observation noise variance (registry default per benchmark)");
  flag("b", "UCBV range constant");
  flag("c", "UCBV exploration constant");
  flag("nu1", "smoothness scale");
  flag("rho", "smoothness rate in (0,1)");
  flag("nu-max", "mfpoo: nu upper bound");
  flag("rho-max", "mfpoo: rho upper bound");
  flag("delay", "none | const:N | geo:MEAN");
  flag("fidelity", "on | off");
  flag("zeta0", "fidelity bias scale");
  flag("budget-cost", "total evaluation cost");
  flag("budget-rounds", "number of rounds");
  flag("seeds", "e.g. 0-9 or 1,4,7");
  flag("checkpoints", "comma separated rounds (or costs under --budget-cost)");
  flag("out", "output directory (PCTS_OUT_DIR wins)");
  flag("preset", "named reproduction preset");
  flag("noise", "gaussian | laplace | uniform");
  flag("cost-model", "benchmark | linear:B | constant:B | poly:B | exp:B");
  flag("jobs", "worker threads for independent seeds");
  bool append_rho_max = false;
  app.add_flag("--append-rho-max", append_rho_max, "mfpoo: also run rho_max itself");
  std::string config_path;
  app.add_option("--config", config_path, "key = value or JSON config; flags override it");
  bool list_presets = false;
  app.add_flag("--list-presets", list_presets, "print preset names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  if (list_presets) {
    for (const auto& [name, opts] : pcts::presets()) std::cout << name << '\n';
    return kOk;
  }

  pcts::ExperimentSpec spec;
  try {
    pcts::OptionMap options;
    if (!config_path.empty()) options = pcts::load_config_file(config_path);
    for (const auto& [name, value] : values) {
      if (app.count("--" + name) > 0) options[name] = value;
    }
    if (append_rho_max) options["append-rho-max"] = "on";
    std::optional<std::string> env_out;
    if (const char* e = std::getenv("PCTS_OUT_DIR"); e && *e) env_out = e;
    spec = pcts::resolve_spec(options, env_out);
  } catch (const pcts::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return e.kind() == pcts::ConfigErrorKind::Io ? kIo : kConfig;
  }

  pcts::SuiteResult result;
  try {
    result = pcts::run_suite(spec);
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << '\n';
    return kRuntime;
  }

  try {
    pcts::write_suite_outputs(spec, result);
  } catch (const std::exception& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kIo;
  }

  const auto& s = result.summary;
  std::cout << s.algorithm << " on " << s.benchmark << " (" << s.delay << "), " << s.seeds << " seeds\n"
            << "  final value  max " << pcts::format_number(s.max_final) << "  median "
            << pcts::format_number(s.median_final) << "  std " << pcts::format_number(s.std_final) << '\n'
            << "  tree  median height " << pcts::format_number(s.median_height) << "  median nodes "
            << pcts::format_number(s.median_node_count) << '\n'
            << "  wrote " << spec.out_dir.string() << '\n';
  return kOk;
}
