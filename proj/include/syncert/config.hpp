#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "syncert/graphs.hpp"
#include "syncert/measures.hpp"
#include "syncert/models.hpp"
#include "syncert/simulate.hpp"

namespace syncert {

// One config = one reproducible experiment. Strict schema: unknown keys are
// rejected, referenced names must resolve, randomized samplers must carry a
// seed.
struct ScenarioConfig {
  std::string command;  // measure | spectrum | certify | search-weight | simulate | pde

  // model block
  std::string model_name;
  std::map<std::string, double> model_params;
  std::optional<Matrix> model_matrix;  // linear models
  std::optional<double> signal_offset, signal_amplitude, signal_frequency;

  // graph block
  std::optional<GraphTopology> graph;

  // pde block
  double pde_length = 1.0;
  int pde_mesh = 0;
  Boundary pde_bc = Boundary::None;

  // norm block
  PNorm p = PNorm::Two;
  std::optional<Vec> weights;

  // diffusion block
  std::optional<Vec> diffusion;

  // shift block
  std::optional<double> lambda;

  // sampler block
  std::optional<SampleStrategy> sampler;
  std::optional<Box> sample_box;
  std::vector<double> sample_times = {0.0};

  // search block
  int search_budget = 200;
  std::uint64_t search_seed = 0;
  bool has_search_seed = false;

  // run block
  double t_end = 10.0;
  double dt = 1e-3;
  int stride = 1;
  double slack = 1e-6;
  std::vector<Vec> initial_states;               // explicit per-compartment states
  std::optional<std::uint64_t> initial_seed;     // or seeded draws over a box
  std::optional<Box> initial_box;
  Vec profile_offset, profile_amplitude;         // pde initial profile
  int profile_mode = 1;
  std::optional<BoundForm> bound;

  std::string output = "out";
};

ScenarioConfig parse_config_file(const std::string& path);
ScenarioConfig parse_config_text(const std::string& text);

// Builds the model described by the config (throws ConfigError on bad input).
Model build_model(const ScenarioConfig& cfg);

// Executes the scenario, writing reports and CSVs under out_dir. Returns the
// output directory actually used. Identical inputs produce byte-identical
// files.
std::string run_config(const ScenarioConfig& cfg, const std::optional<std::string>& out_override,
                       const std::optional<std::uint64_t>& seed_override);

}  // namespace syncert
