#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lpa/cli/commands.hpp"
#include "lpa/cli/config.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitConfig = 2;

struct Options {
  std::string config;
  std::optional<double> p;
  std::string w;
  std::optional<long long> n, iters, seed;
  std::string out = "lpa-out";
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--config", o.config, "JSON configuration file");
  sub->add_option("--p", o.p, "exponent p (or the single-entry p grid)");
  sub->add_option("--w", o.w, "complex point RE,IM");
  sub->add_option("--n", o.n, "section size or truncation degree");
  sub->add_option("--iters", o.iters, "iteration budget");
  sub->add_option("--seed", o.seed, "random seed");
  sub->add_option("--out", o.out, "output directory");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lpa: numerical checks for l^p spaces of analytic functions"};
  app.require_subcommand(1);
  Options opts;
  for (const auto& name : lpa::cli::command_names()) {
    add_common(app.add_subcommand(name, "run the " + name + " experiment"), opts);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  lpa::cli::RunReport report;
  const auto start = std::chrono::steady_clock::now();
  try {
    lpa::cli::Overrides flags;
    flags.p = opts.p;
    if (!opts.w.empty()) flags.w = lpa::cli::parse_complex_flag(opts.w);
    flags.n = opts.n;
    flags.iters = opts.iters;
    flags.seed = opts.seed;
    std::optional<std::filesystem::path> file;
    if (!opts.config.empty()) file = opts.config;
    const auto config = lpa::cli::resolve_config(command, file, flags);
    report = lpa::cli::run_command(command, config);
  } catch (const lpa::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerdict;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  nlohmann::json timing = report.timing;
  timing["command"] = command;
  timing["wall_seconds"] = seconds;
  try {
    lpa::cli::write_outputs(report, opts.out, timing);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerdict;
  }

  for (const auto& v : report.verdicts) {
    std::cout << (v.pass ? "PASS " : "FAIL ") << v.name << '\n';
  }
  std::cout << (report.passed() ? "all verdicts passed" : "verdict failure")
            << " (" << opts.out << "/report.json)\n";
  return report.passed() ? kExitPass : kExitVerdict;
}
