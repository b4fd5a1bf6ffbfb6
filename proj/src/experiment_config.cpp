#include "vgibbs/experiment_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "vgibbs/io.hpp"
#include "vgibbs/random.hpp"

namespace vgibbs {

const std::vector<std::string> kSuiteNames = {"laplace",     "moments", "hamiltonian",
                                              "partition",   "consistency", "dlr",
                                              "lyapunov",    "tempered",    "all"};

PartitionSpec ExperimentConfig::partition() const { return PartitionSpec(d, delta, range); }

MarkMeasure ExperimentConfig::marks() const {
  return MarkMeasure(d, alpha_mark, beta_mark, eps_trunc, direction);
}

std::unique_ptr<PairPotential> ExperimentConfig::make_phi() const {
  return make_potential(potential, strength, partition());
}

MassEvent ExperimentConfig::event(const PartitionSpec& ps) const {
  (void)ps;
  MassEvent ev;
  ev.cubes = event_cubes.empty() ? Region({lambda.cubes().front()}) : event_cubes;
  ev.stat = parse_event_stat(event_stat);
  ev.op = parse_event_op(event_op);
  ev.threshold = event_threshold;
  return ev;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& val) {
  double v = 0;
  auto res = std::from_chars(val.data(), val.data() + val.size(), v);
  if (res.ec != std::errc{} || res.ptr != val.data() + val.size())
    throw ConfigError(key + ": expected a number, got '" + val + "'");
  if (!std::isfinite(v)) throw ConfigError(key + ": must be finite");
  return v;
}

long to_long(const std::string& key, const std::string& val) {
  long v = 0;
  auto res = std::from_chars(val.data(), val.data() + val.size(), v);
  if (res.ec != std::errc{} || res.ptr != val.data() + val.size())
    throw ConfigError(key + ": expected an integer, got '" + val + "'");
  return v;
}

std::uint64_t to_u64(const std::string& key, const std::string& val) {
  std::uint64_t v = 0;
  auto res = std::from_chars(val.data(), val.data() + val.size(), v);
  if (res.ec != std::errc{} || res.ptr != val.data() + val.size())
    throw ConfigError(key + ": expected a non-negative integer, got '" + val + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream iss(s);
  while (std::getline(iss, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

Region parse_region(const std::string& key, const std::string& val, int d) {
  if (trim(val).empty()) return Region{};
  std::vector<CubeIndex> cubes;
  for (const auto& part : split(val, ';')) {
    auto coords = split(part, ',');
    if (static_cast<int>(coords.size()) != d)
      throw ConfigError(key + ": cube '" + part + "' needs " + std::to_string(d) +
                        " comma-separated indices");
    CubeIndex k{};
    for (int i = 0; i < d; ++i) k.k[i] = static_cast<int>(to_long(key, coords[i]));
    cubes.push_back(k);
  }
  return Region(std::move(cubes));
}

Vec parse_vec(const std::string& key, const std::string& val, int d) {
  auto coords = split(val, ',');
  if (static_cast<int>(coords.size()) != d)
    throw ConfigError(key + ": needs " + std::to_string(d) + " comma-separated numbers");
  Vec v{};
  for (int i = 0; i < d; ++i) v[i] = to_double(key, coords[i]);
  return v;
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::vector<std::string> order;
  std::istringstream iss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(iss, line)) {
    ++lineno;
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    if (kv.count(key)) throw ConfigError("duplicate key '" + key + "'");
    kv[key] = val;
    order.push_back(key);
  }

  static const std::vector<std::string> known = {
      "d",           "delta",        "range",        "potential",     "strength",
      "alpha_mark",  "beta_mark",    "eps_trunc",    "mark_direction", "suite",
      "lambda",      "xi",           "n_samples",    "seed",          "sampler",
      "trial_budget", "mcmc_burnin", "mcmc_thin",    "mcmc_sigma",    "mcmc_w_birth",
      "mcmc_w_death", "mcmc_w_move", "mcmc_w_mark",  "h",             "psi_value",
      "event_stat",  "event_op",     "event_threshold", "event_cubes", "alpha_temp",
      "beta_lyapunov", "eps_young",  "moment_order", "jobs",          "out_dir",
      "formats",     "dump_n"};
  for (const auto& k : order)
    if (std::find(known.begin(), known.end(), k) == known.end())
      throw ConfigError("unknown key '" + k + "'");

  ExperimentConfig cfg;
  auto has = [&](const char* k) { return kv.count(k) != 0; };
  auto str = [&](const char* k, const std::string& dflt) { return has(k) ? kv[k] : dflt; };

  cfg.d = static_cast<int>(has("d") ? to_long("d", kv["d"]) : 1);
  if (cfg.d < 1 || cfg.d > kMaxDim)
    throw ConfigError("d: must be between 1 and " + std::to_string(kMaxDim));
  if (has("delta")) cfg.delta = to_double("delta", kv["delta"]);
  if (has("range")) cfg.range = to_double("range", kv["range"]);
  if (cfg.delta <= 0) throw ConfigError("delta: must be positive");
  if (cfg.range <= 0) throw ConfigError("range: must be positive");

  try {
    cfg.potential = parse_potential_kind(str("potential", "hard_range"));
  } catch (const std::exception& e) {
    throw ConfigError(std::string("potential: ") + e.what());
  }
  if (has("strength")) cfg.strength = to_double("strength", kv["strength"]);
  if (cfg.strength < 0) throw ConfigError("strength: must be non-negative");

  cfg.alpha_mark = has("alpha_mark") ? to_double("alpha_mark", kv["alpha_mark"])
                                     : static_cast<double>(cfg.d);
  if (has("beta_mark")) cfg.beta_mark = to_double("beta_mark", kv["beta_mark"]);
  if (has("eps_trunc")) cfg.eps_trunc = to_double("eps_trunc", kv["eps_trunc"]);
  {
    std::string dir = str("mark_direction", "positive_ray");
    if (dir == "isotropic")
      cfg.direction = MarkDirection::isotropic;
    else if (dir == "positive_ray")
      cfg.direction = MarkDirection::positive_ray;
    else
      throw ConfigError("mark_direction: expected isotropic or positive_ray, got '" + dir + "'");
  }

  cfg.suite = str("suite", "all");
  if (std::find(kSuiteNames.begin(), kSuiteNames.end(), cfg.suite) == kSuiteNames.end()) {
    std::string names;
    for (const auto& s : kSuiteNames) names += (names.empty() ? "" : "|") + s;
    throw ConfigError("suite: expected one of " + names + ", got '" + cfg.suite + "'");
  }

  if (!has("lambda")) throw ConfigError("lambda: required (list of cube indices, e.g. '0; 1')");
  cfg.lambda = parse_region("lambda", kv["lambda"], cfg.d);
  if (cfg.lambda.empty()) throw ConfigError("lambda: must contain at least one cube");

  cfg.xi_source = str("xi", "empty");
  if (cfg.xi_source != "empty" && cfg.xi_source != "sampled" &&
      cfg.xi_source.rfind("file:", 0) != 0)
    throw ConfigError("xi: expected empty, sampled, or file:PATH, got '" + cfg.xi_source + "'");

  if (has("n_samples")) cfg.n_samples = to_long("n_samples", kv["n_samples"]);
  if (cfg.n_samples < 2) throw ConfigError("n_samples: must be at least 2");
  if (has("seed")) cfg.seed = to_u64("seed", kv["seed"]);
  cfg.sampler = str("sampler", "rejection");
  if (cfg.sampler != "rejection" && cfg.sampler != "mcmc")
    throw ConfigError("sampler: expected rejection or mcmc, got '" + cfg.sampler + "'");
  if (has("trial_budget")) cfg.trial_budget = to_long("trial_budget", kv["trial_budget"]);
  if (cfg.trial_budget < 1) throw ConfigError("trial_budget: must be at least 1");

  if (has("mcmc_burnin")) cfg.mcmc.burn_in = to_long("mcmc_burnin", kv["mcmc_burnin"]);
  if (cfg.mcmc.burn_in < 0) throw ConfigError("mcmc_burnin: must be non-negative");
  if (has("mcmc_thin")) cfg.mcmc.thin = to_long("mcmc_thin", kv["mcmc_thin"]);
  if (cfg.mcmc.thin < 1) throw ConfigError("mcmc_thin: must be at least 1");
  if (has("mcmc_sigma")) cfg.mcmc.move_sigma = to_double("mcmc_sigma", kv["mcmc_sigma"]);
  if (cfg.mcmc.move_sigma < 0) throw ConfigError("mcmc_sigma: must be non-negative");
  if (has("mcmc_w_birth")) cfg.mcmc.w_birth = to_double("mcmc_w_birth", kv["mcmc_w_birth"]);
  if (has("mcmc_w_death")) cfg.mcmc.w_death = to_double("mcmc_w_death", kv["mcmc_w_death"]);
  if (has("mcmc_w_move")) cfg.mcmc.w_move = to_double("mcmc_w_move", kv["mcmc_w_move"]);
  if (has("mcmc_w_mark")) cfg.mcmc.w_mark = to_double("mcmc_w_mark", kv["mcmc_w_mark"]);
  {
    double ws[] = {cfg.mcmc.w_birth, cfg.mcmc.w_death, cfg.mcmc.w_move, cfg.mcmc.w_mark};
    double sum = 0;
    for (double w : ws) {
      if (w < 0) throw ConfigError("mcmc move weights must be non-negative");
      sum += w;
    }
    if (sum <= 0) throw ConfigError("mcmc move weights must not all be zero");
    if (std::abs(sum - 1.0) > 1e-12) {
      cfg.mcmc.w_birth /= sum;
      cfg.mcmc.w_death /= sum;
      cfg.mcmc.w_move /= sum;
      cfg.mcmc.w_mark /= sum;
    }
  }

  if (has("h")) {
    cfg.h = parse_vec("h", kv["h"], cfg.d);
    cfg.h_set = true;
  } else {
    cfg.h = Vec{};
    cfg.h[0] = 0.5;
  }
  if (has("psi_value")) cfg.psi_value = to_double("psi_value", kv["psi_value"]);
  if (cfg.psi_value < 0) throw ConfigError("psi_value: must be non-negative");

  cfg.event_stat = str("event_stat", "tv");
  cfg.event_op = str("event_op", "gt");
  try {
    parse_event_stat(cfg.event_stat);
    parse_event_op(cfg.event_op);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  if (has("event_threshold"))
    cfg.event_threshold = to_double("event_threshold", kv["event_threshold"]);
  if (has("event_cubes")) cfg.event_cubes = parse_region("event_cubes", kv["event_cubes"], cfg.d);

  if (has("alpha_temp")) cfg.alpha_temp = to_double("alpha_temp", kv["alpha_temp"]);
  if (cfg.alpha_temp <= 0) throw ConfigError("alpha_temp: must be positive");
  if (has("beta_lyapunov")) cfg.beta_lyapunov = to_double("beta_lyapunov", kv["beta_lyapunov"]);
  if (cfg.beta_lyapunov < 0) throw ConfigError("beta_lyapunov: must be non-negative");
  if (has("eps_young")) cfg.eps_young = to_double("eps_young", kv["eps_young"]);
  if (cfg.eps_young < 0) throw ConfigError("eps_young: must be non-negative");
  if (has("moment_order")) cfg.moment_order = static_cast<int>(to_long("moment_order", kv["moment_order"]));
  if (cfg.moment_order < 0 || cfg.moment_order > 4)
    throw ConfigError("moment_order: must be between 0 and 4");
  if (has("jobs")) cfg.jobs = static_cast<int>(to_long("jobs", kv["jobs"]));
  if (cfg.jobs < 1) throw ConfigError("jobs: must be at least 1");

  cfg.out_dir = str("out_dir", "out");
  {
    cfg.write_json = cfg.write_csv = false;
    for (const auto& f : split(str("formats", "json,csv"), ',')) {
      if (f == "json")
        cfg.write_json = true;
      else if (f == "csv")
        cfg.write_csv = true;
      else
        throw ConfigError("formats: expected json and/or csv, got '" + f + "'");
    }
    if (!cfg.write_json && !cfg.write_csv) throw ConfigError("formats: must not be empty");
  }
  if (has("dump_n")) cfg.dump_n = to_long("dump_n", kv["dump_n"]);
  if (cfg.dump_n < 0) throw ConfigError("dump_n: must be non-negative");

  // Model-level preconditions surface as config errors, not run errors.
  PartitionSpec ps(1, 1.0, 1.0);
  try {
    ps = cfg.partition();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("partition: ") + e.what());
  }
  try {
    (void)cfg.marks();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("mark measure: ") + e.what());
  }
  std::unique_ptr<PairPotential> phi;
  try {
    phi = cfg.make_phi();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("potential: ") + e.what());
  }
  auto audit = verify_potential(*phi, ps, Rng(cfg.seed).child(0xAAu));
  if (!audit.ok) throw ConfigError("potential audit failed: " + audit.violation);

  if (cfg.xi_source.rfind("file:", 0) == 0) {
    const std::string path = cfg.xi_source.substr(5);
    try {
      (void)read_configuration_file(path, ps);
    } catch (const std::exception& e) {
      throw ConfigError(std::string("xi: ") + e.what());
    }
  }
  if (!cfg.event_cubes.empty()) {
    Region allowed = grow_by_halo(cfg.lambda, ps, 8);
    if (!cfg.event_cubes.subset_of(allowed))
      throw ConfigError("event_cubes: too far from lambda for any suite window");
  }

  // Canonical resolved listing (full schema, post-default).
  auto& r = cfg.resolved;
  auto fmt_region = [&](const Region& reg) {
    std::string s;
    for (const auto& k : reg) {
      if (!s.empty()) s += "; ";
      for (int i = 0; i < cfg.d; ++i) s += (i ? "," : "") + std::to_string(k.k[i]);
    }
    return s;
  };
  r.emplace_back("d", std::to_string(cfg.d));
  r.emplace_back("delta", format_double(cfg.delta));
  r.emplace_back("range", format_double(cfg.range));
  r.emplace_back("potential", to_string(cfg.potential));
  r.emplace_back("strength", format_double(cfg.strength));
  r.emplace_back("alpha_mark", format_double(cfg.alpha_mark));
  r.emplace_back("beta_mark", format_double(cfg.beta_mark));
  r.emplace_back("eps_trunc", format_double(cfg.eps_trunc));
  r.emplace_back("mark_direction",
                 cfg.direction == MarkDirection::positive_ray ? "positive_ray" : "isotropic");
  r.emplace_back("suite", cfg.suite);
  r.emplace_back("lambda", fmt_region(cfg.lambda));
  r.emplace_back("xi", cfg.xi_source);
  r.emplace_back("n_samples", std::to_string(cfg.n_samples));
  r.emplace_back("seed", std::to_string(cfg.seed));
  r.emplace_back("sampler", cfg.sampler);
  r.emplace_back("trial_budget", std::to_string(cfg.trial_budget));
  r.emplace_back("mcmc_burnin", std::to_string(cfg.mcmc.burn_in));
  r.emplace_back("mcmc_thin", std::to_string(cfg.mcmc.thin));
  r.emplace_back("mcmc_sigma", format_double(cfg.mcmc.move_sigma));
  r.emplace_back("mcmc_w_birth", format_double(cfg.mcmc.w_birth));
  r.emplace_back("mcmc_w_death", format_double(cfg.mcmc.w_death));
  r.emplace_back("mcmc_w_move", format_double(cfg.mcmc.w_move));
  r.emplace_back("mcmc_w_mark", format_double(cfg.mcmc.w_mark));
  {
    std::string hs;
    for (int i = 0; i < cfg.d; ++i) hs += (i ? "," : "") + format_double(cfg.h[i]);
    r.emplace_back("h", hs);
  }
  r.emplace_back("psi_value", format_double(cfg.psi_value));
  r.emplace_back("event_stat", cfg.event_stat);
  r.emplace_back("event_op", cfg.event_op);
  r.emplace_back("event_threshold", format_double(cfg.event_threshold));
  r.emplace_back("event_cubes", fmt_region(cfg.event_cubes));
  r.emplace_back("alpha_temp", format_double(cfg.alpha_temp));
  r.emplace_back("beta_lyapunov", format_double(cfg.beta_lyapunov));
  r.emplace_back("eps_young", format_double(cfg.eps_young));
  r.emplace_back("moment_order", std::to_string(cfg.moment_order));
  r.emplace_back("jobs", std::to_string(cfg.jobs));
  r.emplace_back("out_dir", cfg.out_dir);
  r.emplace_back("formats", std::string(cfg.write_json ? "json" : "") +
                                (cfg.write_json && cfg.write_csv ? "," : "") +
                                (cfg.write_csv ? "csv" : ""));
  r.emplace_back("dump_n", std::to_string(cfg.dump_n));

  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse_config_text(ss.str());
}

void apply_overrides(ExperimentConfig& cfg, const ConfigOverrides& ov) {
  auto set = [&](const char* key, const std::string& val) {
    for (auto& [k, v] : cfg.resolved)
      if (k == key) {
        v = val;
        return;
      }
  };
  if (ov.seed) {
    cfg.seed = *ov.seed;
    set("seed", std::to_string(cfg.seed));
  }
  if (ov.out_dir) {
    cfg.out_dir = *ov.out_dir;
    set("out_dir", cfg.out_dir);
  }
  if (ov.suite) {
    if (std::find(kSuiteNames.begin(), kSuiteNames.end(), *ov.suite) == kSuiteNames.end())
      throw ConfigError("suite: unknown name '" + *ov.suite + "'");
    cfg.suite = *ov.suite;
    set("suite", cfg.suite);
  }
  if (ov.jobs) {
    if (*ov.jobs < 1) throw ConfigError("jobs: must be at least 1");
    cfg.jobs = *ov.jobs;
    set("jobs", std::to_string(cfg.jobs));
  }
}

}  // namespace vgibbs
