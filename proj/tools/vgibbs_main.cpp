#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "vgibbs/experiment_config.hpp"
#include "vgibbs/runner.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    vgibbs::ConfigOverrides ov;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_suite_jobs) {
  cmd->add_option("--config", args.config_path, "experiment config file")->required();
  cmd->add_option_function<std::uint64_t>(
      "--seed", [&args](std::uint64_t s) { args.ov.seed = s; }, "override the root seed");
  cmd->add_option_function<std::string>(
      "--out", [&args](const std::string& d) { args.ov.out_dir = d; },
      "override the output directory");
  if (with_suite_jobs) {
    cmd->add_option_function<std::string>(
        "--suite", [&args](const std::string& s) { args.ov.suite = s; },
        "override the suite name");
    cmd->add_option_function<int>(
        "--jobs", [&args](int j) { args.ov.jobs = j; }, "override the worker count");
  }
}

vgibbs::ExperimentConfig load(const CommonArgs& args) {
  auto cfg = vgibbs::parse_config_file(args.config_path);
  vgibbs::apply_overrides(cfg, args.ov);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-volume Gibbs measure test bench"};
  app.require_subcommand(1);

  CommonArgs run_args, dump_args, val_args;
  CLI::App* run = app.add_subcommand("run", "execute a suite and write reports");
  add_common(run, run_args, true);
  CLI::App* dump = app.add_subcommand("dump", "write sample configurations and a manifest");
  add_common(dump, dump_args, false);
  CLI::App* val = app.add_subcommand("validate", "parse and validate a config, then exit");
  add_common(val, val_args, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      auto cfg = load(run_args);
      int status = vgibbs::run_and_write(cfg);
      std::cout << "suite " << cfg.suite << ": status " << status << ", reports under "
                << cfg.out_dir << "\n";
      return status;
    }
    if (dump->parsed()) {
      auto cfg = load(dump_args);
      int status = vgibbs::dump_samples(cfg);
      std::cout << "dump: status " << status << ", samples under " << cfg.out_dir
                << "/samples\n";
      return status;
    }
    auto cfg = load(val_args);
    std::cout << "ok\n";
    for (const auto& [k, v] : cfg.resolved) std::cout << k << " = " << v << "\n";
    return 0;
  } catch (const vgibbs::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
