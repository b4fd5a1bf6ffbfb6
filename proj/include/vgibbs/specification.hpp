#ifndef VGIBBS_SPECIFICATION_HPP
#define VGIBBS_SPECIFICATION_HPP

#include <vector>

#include "vgibbs/events.hpp"
#include "vgibbs/interaction.hpp"
#include "vgibbs/reference_measure.hpp"
#include "vgibbs/stats.hpp"

namespace vgibbs {

struct GibbsSample {
    Configuration config;    // atoms on lam
    Configuration boundary;  // the condition actually used (projected to the halo)
    long attempts = 0;       // rejection trials or chain steps spent
};

struct PartitionEstimate : KernelEstimate {
    double mean_energy = 0.0;
    double jensen_rhs = 0.0;  // exp(-mean_energy); value >= this by convexity
};

// E exp(-H) under the truncated reference measure on lam with boundary xi.
PartitionEstimate partition_function_mc(const Region& lam, const Configuration& xi,
                                        const PairPotential& phi, const PoissonSpec& ps, long n,
                                        Rng rng);

// Exact draw from the finite-volume measure by rejection.  Valid only while
// e^{-H} <= 1, i.e. nonnegative energies; negative energy raises domain_error.
GibbsSample sample_gibbs_rejection(const Region& lam, const Configuration& xi,
                                   const PairPotential& phi, const PoissonSpec& ps, Rng& rng,
                                   long budget = 1000000);

struct McmcParams {
    long burn_in = 10000;
    long thin = 10;
    double move_sigma = 0.0;  // 0: half a cube edge
    double w_birth = 0.3;
    double w_death = 0.3;
    double w_move = 0.3;
    double w_mark = 0.1;
};

// Metropolis chain targeting the same finite-volume measure: birth, death,
// position move (reflected Gaussian), mark resample.
class GibbsChain {
  public:
    GibbsChain(const Region& lam, const Configuration& xi, const PairPotential& phi,
               const PoissonSpec& ps, McmcParams params, Rng rng);

    void step();
    void run(long steps);
    Configuration snapshot() const;
    const Configuration& boundary() const { return xi_halo_; }
    long steps_done() const { return steps_; }
    long accepted() const { return accepted_; }

    // Raw Metropolis ratios, exposed for balance checks.
    double birth_log_ratio(const Atom& a) const;
    double death_log_ratio(std::size_t i) const;

  private:
    double atom_energy(const Atom& a, std::size_t exclude) const;
    void insert_atom(const Atom& a);
    void remove_atom(std::size_t i);

    Region lam_;
    const PairPotential* phi_;
    PoissonSpec ps_;
    Configuration xi_halo_;
    std::map<CubeIndex, std::vector<std::size_t>> xi_cells_;
    McmcParams mp_;
    Rng rng_;
    std::vector<Atom> atoms_;
    std::map<CubeIndex, std::vector<std::size_t>> cells_;
    std::vector<CubeIndex> lam_cubes_;
    Vec lo_{}, hi_{};
    double kappa_tot_;
    double sigma_;
    long steps_ = 0;
    long accepted_ = 0;
};

GibbsSample sample_gibbs_mcmc(const Region& lam, const Configuration& xi, const PairPotential& phi,
                              const PoissonSpec& ps, const McmcParams& params, Rng rng);

// Burn in once, then collect n states `thin` steps apart.
std::vector<Configuration> mcmc_samples(const Region& lam, const Configuration& xi,
                                        const PairPotential& phi, const PoissonSpec& ps,
                                        const McmcParams& params, long n, Rng rng);

// pi_lam(event | xi) by exact sampling; the event sees the glued
// configuration, so its cubes may lie outside lam.
KernelEstimate kernel_probability(const Region& lam, const Configuration& xi,
                                  const PairPotential& phi, const PoissonSpec& ps,
                                  const MassEvent& event, long n, Rng rng);

struct ConsistencyReport {
    KernelEstimate direct;     // pi_outer(B | xi)
    KernelEstimate two_stage;  // pi_outer integrated against pi_inner(B | .)
    double diff = 0.0;
    double sigma = 0.0;  // pooled standard error
    bool pass = false;   // |diff| <= 3 sigma
};

// Checks the tower property between nested volumes: resampling the inner
// volume from an outer-kernel draw must not move event probabilities.
ConsistencyReport consistency_residual(const Region& inner_lam, const Region& outer_lam,
                                       const Configuration& xi, const PairPotential& phi,
                                       const PoissonSpec& ps, const MassEvent& event, long n,
                                       Rng rng);

struct DlrRow {
    int rings = 0;
    ConsistencyReport report;
};

struct DlrReport {
    std::vector<DlrRow> rows;
    SlopeFit trend;          // |diff| against ring count
    bool trend_pass = false; // slope not significantly positive
    bool rows_pass = false;
};

// Approximates the infinite-volume measure by kernels on lam grown by 1..N
// halo rings and measures the one-volume DLR residual at each stage.
DlrReport dlr_residual(const Region& lam, const Configuration& xi, const PairPotential& phi,
                       const PoissonSpec& ps, const MassEvent& event,
                       const std::vector<int>& rings, long n, Rng rng);

}  // namespace vgibbs

#endif
