#ifndef VGIBBS_EXPERIMENT_CONFIG_HPP
#define VGIBBS_EXPERIMENT_CONFIG_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vgibbs/events.hpp"
#include "vgibbs/geometry.hpp"
#include "vgibbs/interaction.hpp"
#include "vgibbs/mark_measure.hpp"
#include "vgibbs/specification.hpp"
#include "vgibbs/vec.hpp"

namespace vgibbs {

// Bad key, bad value, or a model precondition that fails before any run starts.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat key = value experiment description.  Every field has a default except
// lambda; unknown keys are rejected.
struct ExperimentConfig {
    // model
    int d = 1;
    double delta = 1.0;
    double range = 1.0;
    PotentialKind potential = PotentialKind::hard_range;
    double strength = 0.1;
    double alpha_mark = 1.0;  // defaults track d when not given explicitly
    double beta_mark = 2.0;
    double eps_trunc = 0.5;
    MarkDirection direction = MarkDirection::positive_ray;

    // run
    std::string suite = "all";
    Region lambda;
    std::string xi_source = "empty";  // empty | sampled | file:PATH
    long n_samples = 10000;
    std::uint64_t seed = 1;
    std::string sampler = "rejection";  // rejection | mcmc (sample dumps)
    long trial_budget = 1000000;
    McmcParams mcmc;
    Vec h{};          // Laplace test direction, d components
    bool h_set = false;
    double psi_value = 1.0;  // constant test-function value on lambda
    std::string event_stat = "tv";
    std::string event_op = "gt";
    double event_threshold = 1.0;
    Region event_cubes;  // empty: first cube of lambda
    double alpha_temp = 0.2;
    double beta_lyapunov = 0.0;  // 0: repulsion constant of the potential
    double eps_young = 0.0;      // 0: defaulted per check
    int moment_order = 2;
    int jobs = 1;

    // output
    std::string out_dir = "out";
    bool write_json = true;
    bool write_csv = true;
    long dump_n = 10;

    // resolved key/value pairs in canonical order, for report embedding
    std::vector<std::pair<std::string, std::string>> resolved;

    PartitionSpec partition() const;
    MarkMeasure marks() const;
    std::unique_ptr<PairPotential> make_phi() const;
    MassEvent event(const PartitionSpec& ps) const;
    bool positive_regime() const { return direction == MarkDirection::positive_ray; }
};

// Parse and fully validate.  Audits the potential against its declared
// constants; a violation is a ConfigError naming the broken assumption.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

struct ConfigOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
    std::optional<std::string> suite;
    std::optional<int> jobs;
};

void apply_overrides(ExperimentConfig& cfg, const ConfigOverrides& ov);

extern const std::vector<std::string> kSuiteNames;

}  // namespace vgibbs

#endif
