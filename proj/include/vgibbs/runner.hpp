#ifndef VGIBBS_RUNNER_HPP
#define VGIBBS_RUNNER_HPP

#include <string>
#include <utility>
#include <vector>

#include "vgibbs/experiment_config.hpp"

namespace vgibbs {

// One independent report cell: a named check with its numbers.  A cell that
// threw carries the message in note and counts as an execution error, which
// maps to exit status 3.
struct CellResult {
    std::string suite;
    std::string name;
    bool pass = true;
    bool error = false;
    std::string note;
    std::vector<std::pair<std::string, double>> values;
};

struct RunReport {
    std::vector<CellResult> cells;
    int n_passed = 0;
    int n_failed = 0;
    int n_errors = 0;
    bool all_pass = false;
    int status = 0;  // 0 all pass, 1 some check failed, 3 execution error
};

// Executes the configured suite.  Cells run in a pool of cfg.jobs workers;
// every cell owns a stream derived from (seed, cell index), so the schedule
// cannot change any number.
RunReport run_suite(const ExperimentConfig& cfg);

std::string report_json(const ExperimentConfig& cfg, const RunReport& rep);
std::string report_csv(const ExperimentConfig& cfg, const RunReport& rep);

// run_suite + report.json / summary.csv under cfg.out_dir; returns the status.
int run_and_write(const ExperimentConfig& cfg);

// cfg.dump_n draws with the configured sampler into out_dir/samples/, plus a
// manifest with seed, truncation certificate, and acceptance statistics.
int dump_samples(const ExperimentConfig& cfg);

}  // namespace vgibbs

#endif
