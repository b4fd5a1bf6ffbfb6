#include "vgibbs/runner.hpp"

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <thread>

#include "json.hpp"

#include "vgibbs/errors.hpp"
#include "vgibbs/estimates.hpp"
#include "vgibbs/io.hpp"
#include "vgibbs/random.hpp"
#include "vgibbs/reference_measure.hpp"
#include "vgibbs/specification.hpp"
#include "vgibbs/stats.hpp"

namespace vgibbs {

namespace {

using ordered_json = nlohmann::ordered_json;

// Everything the cells share.  Immutable once built, so the pool can read it
// from any thread.
struct Fixture {
    const ExperimentConfig& cfg;
    PartitionSpec part;
    MarkMeasure marks;
    std::unique_ptr<PairPotential> phi;
    Region lam;
    Configuration xi;
    MassEvent ev;
    PoissonSpec base;  // window = lam

    explicit Fixture(const ExperimentConfig& c)
        : cfg(c),
          part(c.partition()),
          marks(c.marks()),
          phi(c.make_phi()),
          lam(c.lambda),
          xi(resolve_xi(c, part, marks)),
          ev(c.event(part)),
          base(part, marks, lam) {}

    static Configuration resolve_xi(const ExperimentConfig& c, const PartitionSpec& part,
                                    const MarkMeasure& marks) {
        if (c.xi_source == "empty") return Configuration(c.d, Region{});
        if (c.xi_source == "sampled") {
            Region shell = grow_by_halo(c.lambda, part, 4).subtract(c.lambda);
            Rng rng = Rng(c.seed).child(0xB0u);
            return sample_poisson(PoissonSpec(part, marks, shell), rng);
        }
        return read_configuration_file(c.xi_source.substr(5), part);
    }
};

struct Task {
    std::string suite;
    std::string name;
    std::function<void(CellResult&, Rng)> fn;
};

void add_estimate(CellResult& r, const char* prefix, const KernelEstimate& e) {
  r.values.emplace_back(std::string(prefix) + "_value", e.value);
  r.values.emplace_back(std::string(prefix) + "_se", e.se);
  if (e.trunc_bound != 0.0) r.values.emplace_back(std::string(prefix) + "_trunc", e.trunc_bound);
}

void add_bound_report(CellResult& r, const BoundReport& b) {
  add_estimate(r, "lhs", b.lhs);
  r.values.emplace_back("rhs", b.rhs);
  for (const auto& [k, v] : b.parameters) r.values.emplace_back(k, v);
  r.pass = b.pass;
}

CubeFunction lam_indicator(const Fixture& fx) {
  return CubeFunction::indicator(fx.lam, fx.cfg.psi_value);
}

void build_laplace(const Fixture& fx, std::vector<Task>& out) {
  out.push_back({"laplace", "closed_form", [&fx](CellResult& r, Rng) {
                   auto lv = laplace_closed_form(fx.base, fx.cfg.h, lam_indicator(fx));
                   r.values.emplace_back("value", lv.value);
                   r.values.emplace_back("trunc_bound", lv.trunc_bound);
                 }});
  out.push_back({"laplace", "empirical_vs_closed", [&fx](CellResult& r, Rng rng) {
                   auto psi = lam_indicator(fx);
                   auto lv = laplace_closed_form(fx.base, fx.cfg.h, psi);
                   auto est = empirical_laplace(fx.base, fx.cfg.h, psi, fx.cfg.n_samples, rng);
                   double diff = std::abs(est.value - lv.value);
                   double tol = 3.0 * est.se + lv.trunc_bound + 1e-12;
                   add_estimate(r, "empirical", est);
                   r.values.emplace_back("closed_form", lv.value);
                   r.values.emplace_back("diff", diff);
                   r.values.emplace_back("tol", tol);
                   r.pass = diff <= tol;
                 }});
}

void build_moments(const Fixture& fx, std::vector<Task>& out) {
  for (int j = 1; j <= fx.cfg.moment_order; ++j) {
    out.push_back({"moments", "factorial_bound_order_" + std::to_string(j),
                   [&fx, j](CellResult& r, Rng rng) {
                     auto chk = moment_bound_check(fx.base, fx.cfg.h, lam_indicator(fx), j,
                                                   fx.cfg.n_samples, rng);
                     r.values.emplace_back("lhs", chk.lhs);
                     r.values.emplace_back("lhs_se", chk.lhs_se);
                     r.values.emplace_back("rhs", chk.rhs);
                     r.pass = chk.pass;
                   }});
  }
  out.push_back({"moments", "mark_moments", [&fx](CellResult& r, Rng) {
                   for (int j = 1; j <= 4; ++j)
                     r.values.emplace_back("m" + std::to_string(j), fx.marks.moment(j));
                   r.values.emplace_back("tail_mass", fx.marks.tail_intensity());
                 }});
  out.push_back({"moments", "tv_moment_exact_vs_mc", [&fx](CellResult& r, Rng rng) {
                   double exact = poisson_tv_moment(fx.base, fx.lam, 2);
                   MeanVar mv;
                   for (long i = 0; i < fx.cfg.n_samples; ++i) {
                     auto eta = sample_poisson(fx.base, rng);
                     double m = tv_mass(eta);
                     mv.add(m * m);
                   }
                   double diff = std::abs(mv.mean() - exact);
                   double tol = 3.0 * mv.stderror() + 1e-12;
                   r.values.emplace_back("exact", exact);
                   r.values.emplace_back("mc", mv.mean());
                   r.values.emplace_back("mc_se", mv.stderror());
                   r.pass = diff <= tol;
                 }});
}

void build_hamiltonian(const Fixture& fx, std::vector<Task>& out) {
  const long m = std::min<long>(fx.cfg.n_samples, 200);
  out.push_back({"hamiltonian", "cell_list_vs_reference", [&fx, m](CellResult& r, Rng rng) {
                   double worst = 0.0;
                   for (long i = 0; i < m; ++i) {
                     auto eta = sample_poisson(fx.base, rng);
                     auto fast = hamiltonian(eta, fx.xi, fx.lam, *fx.phi, fx.part);
                     auto ref = hamiltonian_all_pairs(eta, fx.xi, fx.lam, *fx.phi, fx.part);
                     double scale = std::max(1.0, std::abs(ref.total));
                     worst = std::max(worst, std::abs(fast.total - ref.total) / scale);
                   }
                   r.values.emplace_back("max_rel_diff", worst);
                   r.values.emplace_back("instances", static_cast<double>(m));
                   r.pass = worst <= 1e-12;
                 }});
  out.push_back({"hamiltonian", "repulsion_floor", [&fx, m](CellResult& r, Rng rng) {
                   if (!fx.cfg.positive_regime()) {
                     r.note = "not applicable: signed marks";
                     return;
                   }
                   const double A = fx.phi->constants().repulsion;
                   long violations = 0;
                   double margin = std::numeric_limits<double>::infinity();
                   for (long i = 0; i < m; ++i) {
                     auto eta = sample_poisson(fx.base, rng);
                     double h = hamiltonian(eta, fx.xi, fx.lam, *fx.phi, fx.part).total;
                     double rhs = lower_bound_rhs(eta, fx.lam, A, fx.part);
                     margin = std::min(margin, h - rhs);
                     if (h < rhs * (1.0 - 1e-12) - 1e-12) ++violations;
                   }
                   r.values.emplace_back("violations", static_cast<double>(violations));
                   r.values.emplace_back("min_margin", margin);
                   r.pass = violations == 0;
                 }});
  out.push_back({"hamiltonian", "finiteness", [&fx, m](CellResult& r, Rng rng) {
                   double worst = 0.0;
                   for (long i = 0; i < m; ++i) {
                     auto eta = sample_poisson(fx.base, rng);
                     double bound = finiteness_bound(eta, fx.xi, fx.lam, *fx.phi, fx.part);
                     double h = std::abs(hamiltonian(eta, fx.xi, fx.lam, *fx.phi, fx.part).total);
                     if (bound > 0) worst = std::max(worst, h / bound);
                   }
                   r.values.emplace_back("max_ratio", worst);
                   r.pass = worst <= 1.0 + 1e-9;
                 }});
}

void build_partition(const Fixture& fx, std::vector<Task>& out) {
  out.push_back({"partition", "normalization", [&fx](CellResult& r, Rng rng) {
                   auto pe =
                       partition_function_mc(fx.lam, fx.xi, *fx.phi, fx.base, fx.cfg.n_samples, rng);
                   r.values.emplace_back("value", pe.value);
                   r.values.emplace_back("se", pe.se);
                   r.values.emplace_back("mean_energy", pe.mean_energy);
                   r.values.emplace_back("jensen_rhs", pe.jensen_rhs);
                   bool positive = pe.value > 0.0;
                   bool jensen = pe.value >= pe.jensen_rhs * (1.0 - 1e-10);
                   bool unit = !fx.cfg.positive_regime() || pe.value <= 1.0 + 3.0 * pe.se;
                   r.pass = positive && jensen && unit;
                 }});
  out.push_back({"partition", "acceptance_vs_z", [&fx](CellResult& r, Rng rng) {
                   if (!fx.cfg.positive_regime()) {
                     r.note = "not applicable: signed marks";
                     return;
                   }
                   auto pe = partition_function_mc(fx.lam, fx.xi, *fx.phi, fx.base,
                                                   fx.cfg.n_samples, rng.child(1));
                   const long k = std::min<long>(fx.cfg.n_samples, 200);
                   Rng draw = rng.child(2);
                   double attempts = 0;
                   for (long i = 0; i < k; ++i)
                     attempts += static_cast<double>(
                         sample_gibbs_rejection(fx.lam, fx.xi, *fx.phi, fx.base, draw,
                                                fx.cfg.trial_budget)
                             .attempts);
                   double mean_attempts = attempts / static_cast<double>(k);
                   double z = pe.value;
                   double inv_z = 1.0 / z;
                   double se_att = std::sqrt(std::max(0.0, (1.0 - z)) / (z * z) /
                                             static_cast<double>(k));
                   double se_inv = pe.se / (z * z);
                   double diff = std::abs(mean_attempts - inv_z);
                   double tol = 3.0 * (se_att + se_inv) + 1e-9;
                   r.values.emplace_back("mean_attempts", mean_attempts);
                   r.values.emplace_back("inverse_z", inv_z);
                   r.values.emplace_back("tol", tol);
                   r.pass = diff <= tol;
                 }});
}

void build_consistency(const Fixture& fx, std::vector<Task>& out) {
  out.push_back({"consistency", "tower_residual", [&fx](CellResult& r, Rng rng) {
                   if (!fx.cfg.positive_regime()) {
                     r.note = "not applicable: signed marks";
                     return;
                   }
                   Region outer = grow_by_halo(fx.lam, fx.part, 1);
                   auto rep = consistency_residual(fx.lam, outer, fx.xi, *fx.phi, fx.base, fx.ev,
                                                   fx.cfg.n_samples, rng);
                   add_estimate(r, "direct", rep.direct);
                   add_estimate(r, "two_stage", rep.two_stage);
                   r.values.emplace_back("diff", rep.diff);
                   r.values.emplace_back("sigma", rep.sigma);
                   r.pass = rep.pass;
                 }});
}

void build_dlr(const Fixture& fx, std::vector<Task>& out) {
  out.push_back({"dlr", "residual_rings", [&fx](CellResult& r, Rng rng) {
                   if (!fx.cfg.positive_regime()) {
                     r.note = "not applicable: signed marks";
                     return;
                   }
                   auto rep = dlr_residual(fx.lam, fx.xi, *fx.phi, fx.base, fx.ev, {1, 2, 3},
                                           fx.cfg.n_samples, rng);
                   for (const auto& row : rep.rows) {
                     std::string p = "ring" + std::to_string(row.rings);
                     r.values.emplace_back(p + "_diff", row.report.diff);
                     r.values.emplace_back(p + "_sigma", row.report.sigma);
                   }
                   r.values.emplace_back("trend_slope", rep.trend.slope);
                   r.values.emplace_back("trend_slope_se", rep.trend.slope_se);
                   r.pass = rep.rows_pass && rep.trend_pass;
                 }});
}

void build_lyapunov(const Fixture& fx, std::vector<Task>& out) {
  const double A = fx.phi->constants().repulsion;
  std::vector<std::pair<std::string, double>> betas;
  if (fx.cfg.beta_lyapunov > 0)
    betas.emplace_back("exp_moment", fx.cfg.beta_lyapunov);
  else
    betas = {{"exp_moment_beta_zero", 0.0},
             {"exp_moment_beta_half", A / 2},
             {"exp_moment_beta_full", A}};
  for (const auto& [name, beta] : betas) {
    out.push_back({"lyapunov", name, [&fx, beta](CellResult& r, Rng rng) {
                     if (!fx.cfg.positive_regime()) {
                       r.note = "not applicable: signed marks";
                       return;
                     }
                     auto rep = exp_moment_check(fx.lam.cubes().front(), fx.lam, fx.xi, *fx.phi,
                                                 fx.base, beta, fx.cfg.eps_young,
                                                 fx.cfg.n_samples, rng);
                     add_bound_report(r, rep);
                   }});
  }
}

void build_tempered(const Fixture& fx, std::vector<Task>& out) {
  out.push_back({"tempered", "weight_identity", [&fx](CellResult& r, Rng) {
                   const double beta =
                       fx.cfg.beta_lyapunov > 0 ? fx.cfg.beta_lyapunov
                                                : fx.phi->constants().repulsion;
                   double wsum = 0.0;
                   for (const auto& k : fx.lam) {
                     double n2 = 0.0;
                     for (int i = 0; i < fx.part.dim; ++i)
                       n2 += static_cast<double>(k.k[i]) * static_cast<double>(k.k[i]);
                     wsum += std::exp(-fx.cfg.alpha_temp * std::sqrt(n2));
                   }
                   double nu = beta / wsum;
                   r.values.emplace_back("weight_sum", wsum);
                   r.values.emplace_back("nu", nu);
                   r.values.emplace_back("beta", beta);
                   r.pass = std::abs(nu * wsum - beta) <= 1e-12 * std::max(1.0, beta);
                 }});
  out.push_back({"tempered", "exp_moment_tempered", [&fx](CellResult& r, Rng rng) {
                   if (!fx.cfg.positive_regime()) {
                     r.note = "not applicable: signed marks";
                     return;
                   }
                   auto rep = temperedness_exp_check(fx.lam, fx.xi, *fx.phi, fx.base,
                                                     fx.cfg.alpha_temp, fx.cfg.beta_lyapunov,
                                                     fx.cfg.eps_young, fx.cfg.n_samples, rng);
                   add_bound_report(r, rep);
                 }});
}

void build_support(const Fixture& fx, std::vector<Task>& out) {
  out.push_back({"support", "uniform_moments", [&fx](CellResult& r, Rng rng) {
                   if (!fx.cfg.positive_regime()) {
                     r.note = "not applicable: signed marks";
                     return;
                   }
                   std::vector<Region> growing = {fx.lam, grow_by_halo(fx.lam, fx.part, 1),
                                                  grow_by_halo(fx.lam, fx.part, 2)};
                   auto rep = uniform_moment_check(fx.lam, 2, growing, fx.xi, *fx.phi, fx.base,
                                                   fx.cfg.n_samples, rng);
                   for (std::size_t i = 0; i < rep.rows.size(); ++i) {
                     std::string p = "vol" + std::to_string(i);
                     r.values.emplace_back(p + "_value", rep.rows[i].estimate.value);
                     r.values.emplace_back(p + "_se", rep.rows[i].estimate.se);
                   }
                   r.values.emplace_back("trend_slope", rep.trend.slope);
                   r.pass = rep.trend_pass;
                 }});
  out.push_back({"support", "event_decay", [&fx](CellResult& r, Rng rng) {
                   if (!fx.cfg.positive_regime()) {
                     r.note = "not applicable: signed marks";
                     return;
                   }
                   std::vector<Region> volumes = {fx.lam, grow_by_halo(fx.lam, fx.part, 1),
                                                  grow_by_halo(fx.lam, fx.part, 2)};
                   double t0 = std::max(fx.cfg.event_threshold, 1e-3);
                   std::vector<double> thresholds = {t0, 2 * t0, 4 * t0};
                   auto rep = event_decay_probe(volumes, fx.ev.cubes, fx.xi, *fx.phi, fx.base,
                                                fx.ev.stat, thresholds, fx.cfg.n_samples, rng,
                                                1.0);
                   for (const auto& row : rep.rows) {
                     r.values.emplace_back("p_above_" + format_double(row.threshold),
                                           row.sup_prob);
                   }
                   r.pass = rep.monotone && rep.cheb_all_ok;
                 }});
}

std::vector<Task> build_tasks(const Fixture& fx) {
  std::vector<Task> tasks;
  const std::string& s = fx.cfg.suite;
  bool all = s == "all";
  if (all || s == "laplace") build_laplace(fx, tasks);
  if (all || s == "moments") build_moments(fx, tasks);
  if (all || s == "hamiltonian") build_hamiltonian(fx, tasks);
  if (all || s == "partition") build_partition(fx, tasks);
  if (all || s == "consistency") build_consistency(fx, tasks);
  if (all || s == "dlr") build_dlr(fx, tasks);
  if (all || s == "lyapunov") build_lyapunov(fx, tasks);
  if (all || s == "tempered") build_tempered(fx, tasks);
  if (all) build_support(fx, tasks);
  return tasks;
}

}  // namespace

RunReport run_suite(const ExperimentConfig& cfg) {
  Fixture fx(cfg);
  std::vector<Task> tasks = build_tasks(fx);
  std::vector<CellResult> cells(tasks.size());

  Rng root(cfg.seed);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      CellResult& r = cells[i];
      r.suite = tasks[i].suite;
      r.name = tasks[i].name;
      try {
        tasks[i].fn(r, root.child(0x100u + static_cast<std::uint64_t>(i)));
      } catch (const std::exception& e) {
        r.pass = false;
        r.error = true;
        r.note = e.what();
      }
    }
  };

  const int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(tasks.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  RunReport rep;
  rep.cells = std::move(cells);
  for (const auto& c : rep.cells) {
    if (c.error)
      ++rep.n_errors;
    else if (c.pass)
      ++rep.n_passed;
    else
      ++rep.n_failed;
  }
  rep.all_pass = rep.n_errors == 0 && rep.n_failed == 0;
  rep.status = rep.n_errors > 0 ? 3 : (rep.n_failed > 0 ? 1 : 0);
  return rep;
}

std::string report_json(const ExperimentConfig& cfg, const RunReport& rep) {
  ordered_json j;
  j["schema"] = "vgibbs-report-1";
  j["suite"] = cfg.suite;
  j["seed"] = cfg.seed;
  ordered_json conf = ordered_json::object();
  for (const auto& [k, v] : cfg.resolved) conf[k] = v;
  j["config"] = std::move(conf);
  ordered_json cells = ordered_json::array();
  for (const auto& c : rep.cells) {
    ordered_json jc;
    jc["suite"] = c.suite;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["error"] = c.error;
    if (!c.note.empty()) jc["note"] = c.note;
    ordered_json vals = ordered_json::object();
    for (const auto& [k, v] : c.values) vals[k] = v;
    jc["values"] = std::move(vals);
    cells.push_back(std::move(jc));
  }
  j["cells"] = std::move(cells);
  ordered_json sum;
  sum["cells"] = rep.cells.size();
  sum["passed"] = rep.n_passed;
  sum["failed"] = rep.n_failed;
  sum["errors"] = rep.n_errors;
  sum["all_pass"] = rep.all_pass;
  sum["status"] = rep.status;
  j["summary"] = std::move(sum);
  return j.dump(2) + "\n";
}

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string report_csv(const ExperimentConfig& cfg, const RunReport& rep) {
  (void)cfg;
  std::string out = "suite,cell,pass,error,note,values\n";
  for (const auto& c : rep.cells) {
    std::string vals;
    for (const auto& [k, v] : c.values) {
      if (!vals.empty()) vals += ';';
      vals += k + "=" + format_double(v);
    }
    out += c.suite + "," + c.name + "," + (c.pass ? "1" : "0") + "," + (c.error ? "1" : "0") +
           "," + csv_quote(c.note) + "," + csv_quote(vals) + "\n";
  }
  return out;
}

int run_and_write(const ExperimentConfig& cfg) {
  RunReport rep = run_suite(cfg);
  namespace fs = std::filesystem;
  fs::create_directories(cfg.out_dir);
  if (cfg.write_json) {
    std::ofstream os(fs::path(cfg.out_dir) / "report.json", std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + cfg.out_dir + "/report.json");
    os << report_json(cfg, rep);
  }
  if (cfg.write_csv) {
    std::ofstream os(fs::path(cfg.out_dir) / "summary.csv", std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + cfg.out_dir + "/summary.csv");
    os << report_csv(cfg, rep);
  }
  return rep.status;
}

int dump_samples(const ExperimentConfig& cfg) {
  Fixture fx(cfg);
  namespace fs = std::filesystem;
  fs::path dir = fs::path(cfg.out_dir) / "samples";
  fs::create_directories(dir);

  std::vector<std::string> files;
  long attempts_total = 0;
  int status = 0;
  std::string error_note;

  Rng rng = Rng(cfg.seed).child(0xD0u);
  try {
    if (cfg.sampler == "rejection") {
      for (long i = 0; i < cfg.dump_n; ++i) {
        auto s = sample_gibbs_rejection(fx.lam, fx.xi, *fx.phi, fx.base, rng, cfg.trial_budget);
        attempts_total += s.attempts;
        char name[32];
        std::snprintf(name, sizeof(name), "sample_%04ld.txt", i);
        write_configuration_file(s.config, fx.part, (dir / name).string());
        files.emplace_back(std::string("samples/") + name);
      }
    } else {
      auto snaps = mcmc_samples(fx.lam, fx.xi, *fx.phi, fx.base, cfg.mcmc, cfg.dump_n, rng);
      attempts_total = cfg.mcmc.burn_in + cfg.mcmc.thin * cfg.dump_n;
      for (long i = 0; i < static_cast<long>(snaps.size()); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "sample_%04ld.txt", i);
        write_configuration_file(snaps[static_cast<std::size_t>(i)], fx.part,
                                 (dir / name).string());
        files.emplace_back(std::string("samples/") + name);
      }
    }
  } catch (const std::exception& e) {
    status = 3;
    error_note = e.what();
  }

  ordered_json man;
  man["schema"] = "vgibbs-dump-1";
  man["seed"] = cfg.seed;
  man["sampler"] = cfg.sampler;
  man["requested"] = cfg.dump_n;
  man["written"] = files.size();
  ordered_json conf = ordered_json::object();
  for (const auto& [k, v] : cfg.resolved) conf[k] = v;
  man["config"] = std::move(conf);
  ordered_json acc;
  acc["attempts_total"] = attempts_total;
  if (cfg.sampler == "rejection" && !files.empty()) {
    double mean_att = static_cast<double>(attempts_total) / static_cast<double>(files.size());
    acc["attempts_mean"] = mean_att;
    acc["acceptance_rate"] = 1.0 / mean_att;
  }
  man["acceptance"] = std::move(acc);
  ordered_json trunc;
  trunc["eps"] = fx.marks.eps_trunc();
  trunc["tail_intensity"] = fx.marks.tail_intensity();
  trunc["mean_mass_below_eps"] = fx.marks.first_moment_below(fx.marks.eps_trunc());
  man["truncation"] = std::move(trunc);
  ordered_json jfiles = ordered_json::array();
  for (const auto& f : files) jfiles.push_back(f);
  man["files"] = std::move(jfiles);
  if (!error_note.empty()) man["error"] = error_note;

  std::ofstream os(fs::path(cfg.out_dir) / "samples" / "manifest.json", std::ios::binary);
  if (!os) throw std::runtime_error("cannot write manifest under " + cfg.out_dir);
  os << man.dump(2) + "\n";
  return status;
}

}  // namespace vgibbs
