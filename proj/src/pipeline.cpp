#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "syncert/certify.hpp"
#include "syncert/config.hpp"
#include "syncert/errors.hpp"
#include "syncert/report.hpp"

namespace syncert {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string csv_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
}

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj, int dim) {
  std::string text = "t,compartment,component,value\n";
  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    const Vec& x = traj.states[s];
    const int comp = static_cast<int>(x.size()) / dim;
    for (int i = 0; i < comp; ++i)
      for (int j = 0; j < dim; ++j) {
        text += csv_num(traj.times[s]);
        text += ',';
        text += std::to_string(i);
        text += ',';
        text += std::to_string(j);
        text += ',';
        text += csv_num(x[static_cast<std::size_t>(i) * dim + j]);
        text += '\n';
      }
  }
  write_file(path, text);
}

void write_series_csv(const std::filesystem::path& path, const std::vector<double>& times,
                      const std::vector<double>& values) {
  std::string text = "t,value\n";
  for (std::size_t i = 0; i < times.size(); ++i) {
    text += csv_num(times[i]);
    text += ',';
    text += csv_num(values[i]);
    text += '\n';
  }
  write_file(path, text);
}

NormSpec norm_from_config(const ScenarioConfig& cfg, int dim) {
  if (cfg.weights) {
    if (static_cast<int>(cfg.weights->size()) != dim)
      throw ConfigError("config: 'norm.weights' length does not match the model dimension");
    return NormSpec(cfg.p, *cfg.weights);
  }
  return NormSpec::unweighted(cfg.p, dim);
}

Vec diffusion_from_config(const ScenarioConfig& cfg, int dim) {
  if (!cfg.diffusion) return Vec(dim, 0.0);
  if (static_cast<int>(cfg.diffusion->size()) != dim)
    throw ConfigError("config: 'diffusion.d' length does not match the model dimension");
  return *cfg.diffusion;
}

std::vector<Sample> samples_from_config(const ScenarioConfig& cfg, const Model& model,
                                        const std::optional<std::uint64_t>& seed_override) {
  if (!cfg.sampler) throw ConfigError("config: 'sampler' block is required for this command");
  SampleStrategy strategy = *cfg.sampler;
  if (seed_override && std::holds_alternative<RandomStrategy>(strategy))
    std::get<RandomStrategy>(strategy).seed = *seed_override;
  try {
    return sample_domain(model, strategy, cfg.sample_box, cfg.sample_times);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

Vec initial_state_from_config(const ScenarioConfig& cfg, int compartments, int dim,
                              const std::optional<std::uint64_t>& seed_override) {
  Vec x0(static_cast<std::size_t>(compartments) * dim);
  if (!cfg.initial_states.empty()) {
    if (static_cast<int>(cfg.initial_states.size()) != compartments)
      throw ConfigError("config: 'run.initial' must list one state per compartment");
    for (int i = 0; i < compartments; ++i) {
      if (static_cast<int>(cfg.initial_states[i].size()) != dim)
        throw ConfigError("config: 'run.initial' state dimension mismatch");
      for (int j = 0; j < dim; ++j)
        x0[static_cast<std::size_t>(i) * dim + j] = cfg.initial_states[i][j];
    }
    return x0;
  }
  if (cfg.initial_seed) {
    if (static_cast<int>(cfg.initial_box->axes.size()) != dim)
      throw ConfigError("config: 'run.initial.box' dimension mismatch");
    std::mt19937_64 rng(seed_override ? *seed_override : *cfg.initial_seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < compartments; ++i)
      for (int j = 0; j < dim; ++j) {
        const auto& iv = cfg.initial_box->axes[j];
        x0[static_cast<std::size_t>(i) * dim + j] = iv.lo + (iv.hi - iv.lo) * unit(rng);
      }
    return x0;
  }
  throw ConfigError("config: 'run.initial' is required for simulations");
}

Vec pde_initial_profile(const ScenarioConfig& cfg, int mesh, int dim) {
  Vec offset = cfg.profile_offset, amplitude = cfg.profile_amplitude;
  if (offset.empty()) offset.assign(dim, 0.0);
  if (amplitude.empty()) amplitude.assign(dim, 0.0);
  if (static_cast<int>(offset.size()) != dim || static_cast<int>(amplitude.size()) != dim)
    throw ConfigError("config: 'run.profile' vectors must match the model dimension");
  Vec x0(static_cast<std::size_t>(mesh) * dim);
  for (int i = 0; i < mesh; ++i) {
    const double w = (i + 1) * cfg.pde_length / (mesh + 1);
    for (int j = 0; j < dim; ++j) {
      const double shape = cfg.pde_bc == Boundary::Dirichlet
                               ? std::sin(cfg.profile_mode * kPi * w / cfg.pde_length)
                               : std::cos(cfg.profile_mode * kPi * w / cfg.pde_length);
      x0[static_cast<std::size_t>(i) * dim + j] = offset[j] + amplitude[j] * shape;
    }
  }
  return x0;
}

}  // namespace

std::string run_config(const ScenarioConfig& cfg, const std::optional<std::string>& out_override,
                       const std::optional<std::uint64_t>& seed_override) {
  namespace fs = std::filesystem;
  const fs::path out_dir = out_override ? *out_override : cfg.output;
  fs::create_directories(out_dir);

  if (cfg.command == "spectrum") {
    if (!cfg.graph) throw ConfigError("config: 'graph' block is required for spectrum");
    const Matrix l = laplacian(*cfg.graph);
    const Vec spec = numeric_spectrum(l);
    std::string csv = "index,eigenvalue\n";
    for (std::size_t i = 0; i < spec.size(); ++i)
      csv += std::to_string(i + 1) + "," + csv_num(spec[i]) + "\n";
    write_file(out_dir / "spectrum.csv", csv);

    std::string txt = "spectrum report\n";
    txt += "nodes: " + std::to_string(cfg.graph->nodes()) + "\n";
    txt += "edges: " + std::to_string(cfg.graph->edge_count()) + "\n";
    txt += "lambda2_numeric: " + format_double(spec[1]) + "\n";
    try {
      txt += "lambda2_closed_form: " + format_double(lambda2_closed_form(*cfg.graph)) + "\n";
    } catch (const UnsupportedError&) {
      txt += "lambda2_closed_form: n/a\n";
    }
    write_file(out_dir / "spectrum.txt", txt);
    return out_dir.string();
  }

  const Model model = build_model(cfg);
  const Vec d = diffusion_from_config(cfg, model.dim);

  if (cfg.command == "measure") {
    const NormSpec norm = norm_from_config(cfg, model.dim);
    const auto samples = samples_from_config(cfg, model, seed_override);
    const Certificate cert =
        sup_measure(model, norm, cfg.lambda.value_or(0.0), d, samples);
    write_file(out_dir / "certificate.txt", render_certificate(cert, "measure certificate"));
    return out_dir.string();
  }

  if (cfg.command == "certify") {
    if (!cfg.graph) throw ConfigError("config: 'graph' block is required for certify");
    const NormSpec norm = norm_from_config(cfg, model.dim);
    const auto samples = samples_from_config(cfg, model, seed_override);
    const Certificate cert = check_sync_condition(model, *cfg.graph, d, norm, samples);
    write_file(out_dir / "certificate.txt",
               render_certificate(cert, "synchronization certificate"));
    return out_dir.string();
  }

  if (cfg.command == "search-weight") {
    if (!cfg.has_search_seed && !seed_override)
      throw ConfigError("config: 'search.seed' is mandatory for search-weight");
    const auto samples = samples_from_config(cfg, model, seed_override);
    const std::uint64_t seed = seed_override ? *seed_override : cfg.search_seed;
    const WeightSearchResult res = search_weight(model, cfg.p, cfg.lambda.value_or(0.0), d,
                                                 samples, cfg.search_budget, seed);
    write_file(out_dir / "certificate.txt", render_weight_search(res));
    return out_dir.string();
  }

  if (cfg.command == "simulate") {
    if (!cfg.graph) throw ConfigError("config: 'graph' block is required for simulate");
    const NormSpec norm = norm_from_config(cfg, model.dim);
    const NetworkSystem sys = assemble_network(model, *cfg.graph, d);
    const Vec x0 = initial_state_from_config(cfg, sys.compartments, model.dim, seed_override);
    const Trajectory traj = integrate_rk4(sys, x0, cfg.t_end, cfg.dt, cfg.stride);
    write_trajectory_csv(out_dir / "trajectory.csv", traj, model.dim);
    const auto edges = edge_series(traj, *cfg.graph, norm);
    write_series_csv(out_dir / "edge_series.csv", traj.times, edges);
    const auto dev = deviation_series(traj, norm);
    write_series_csv(out_dir / "deviation_series.csv", traj.times, dev);
    if (cfg.bound) {
      const BoundReport rep = verify_bound(traj.times, edges, *cfg.bound, cfg.slack);
      write_file(out_dir / "bounds.txt",
                 render_bound_report(*cfg.bound, rep, "edge-sum decay bound"));
    }
    return out_dir.string();
  }

  if (cfg.command == "pde") {
    if (cfg.pde_mesh == 0) throw ConfigError("config: 'pde' block is required for pde");
    const NormSpec norm = norm_from_config(cfg, model.dim);
    const NetworkSystem sys =
        discretize_pde_1d(model, d, cfg.pde_length, cfg.pde_mesh, cfg.pde_bc);
    const Vec x0 = pde_initial_profile(cfg, cfg.pde_mesh, model.dim);
    const Trajectory traj = integrate_rk4(sys, x0, cfg.t_end, cfg.dt, cfg.stride);
    write_trajectory_csv(out_dir / "trajectory.csv", traj, model.dim);
    std::vector<double> grad;
    grad.reserve(traj.states.size());
    for (const Vec& x : traj.states)
      grad.push_back(weighted_gradient_norm(x, cfg.pde_length, norm));
    write_series_csv(out_dir / "gradient_series.csv", traj.times, grad);
    if (cfg.bound) {
      const BoundReport rep = verify_bound(traj.times, grad, *cfg.bound, cfg.slack);
      write_file(out_dir / "bounds.txt",
                 render_bound_report(*cfg.bound, rep, "weighted-gradient decay bound"));
    }
    return out_dir.string();
  }

  throw ConfigError("config: unhandled command '" + cfg.command + "'");
}

}  // namespace syncert
