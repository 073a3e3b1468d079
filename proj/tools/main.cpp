#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "syncert/config.hpp"
#include "syncert/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"syncert: contraction and synchronization certificates for diffusively "
               "coupled systems"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::int64_t seed = -1;

  CLI::App* run = app.add_subcommand("run", "execute a scenario config");
  run->add_option("config", config_path, "path to the scenario JSON")->required();
  run->add_option("--out", out_dir, "output directory (overrides config)");
  run->add_option("--seed", seed, "override every seed in the config");

  CLI::App* validate = app.add_subcommand("validate", "parse and validate a scenario config");
  validate->add_option("config", config_path, "path to the scenario JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const syncert::ScenarioConfig cfg = syncert::parse_config_file(config_path);
    if (validate->parsed()) {
      std::printf("ok: %s\n", config_path.c_str());
      return kExitOk;
    }
    std::optional<std::string> out = out_dir.empty() ? std::nullopt
                                                     : std::optional<std::string>(out_dir);
    std::optional<std::uint64_t> seed_override =
        seed < 0 ? std::nullopt : std::optional<std::uint64_t>(static_cast<std::uint64_t>(seed));
    const std::string dir = syncert::run_config(cfg, out, seed_override);
    std::printf("wrote %s\n", dir.c_str());
    return kExitOk;
  } catch (const syncert::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const syncert::DivergenceError& e) {
    std::fprintf(stderr, "error: %s (last valid time %.17g)\n", e.what(), e.last_valid_time);
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntime;
  }
}
