#include "syncert/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "syncert/errors.hpp"

namespace syncert {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::string& where,
                         const std::set<std::string>& allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      throw ConfigError("config: unknown key '" + it.key() + "' in '" + where + "'");
}

double as_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ConfigError("config: '" + where + "' must be a number");
  return j.get<double>();
}

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ConfigError("config: '" + where + "' must be an integer");
  return j.get<int>();
}

Vec as_vec(const json& j, const std::string& where) {
  if (!j.is_array()) throw ConfigError("config: '" + where + "' must be an array of numbers");
  Vec v;
  for (const auto& e : j) v.push_back(as_number(e, where));
  return v;
}

Box as_box(const json& j, const std::string& where) {
  if (!j.is_array()) throw ConfigError("config: '" + where + "' must be an array of [lo, hi]");
  Box box;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2)
      throw ConfigError("config: '" + where + "' entries must be [lo, hi] pairs");
    box.axes.push_back({as_number(e[0], where), as_number(e[1], where)});
  }
  return box;
}

PNorm parse_p(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return PNorm::Inf;
  if (j.is_number_integer()) {
    const int p = j.get<int>();
    if (p == 1) return PNorm::One;
    if (p == 2) return PNorm::Two;
  }
  throw ConfigError("config: 'norm.p' must be 1, 2, or \"inf\"");
}

GraphTopology parse_graph(const json& g) {
  reject_unknown_keys(g, "graph", {"kind", "nodes", "rows", "cols", "edges", "factors"});
  if (!g.contains("kind")) throw ConfigError("config: 'graph.kind' is required");
  const std::string kind = g.at("kind").get<std::string>();
  if (kind == "line") return GraphTopology::line(as_int(g.at("nodes"), "graph.nodes"));
  if (kind == "complete") return GraphTopology::complete(as_int(g.at("nodes"), "graph.nodes"));
  if (kind == "star") return GraphTopology::star(as_int(g.at("nodes"), "graph.nodes"));
  if (kind == "grid")
    return GraphTopology::grid(as_int(g.at("rows"), "graph.rows"),
                               as_int(g.at("cols"), "graph.cols"));
  if (kind == "cartesian") {
    if (!g.contains("factors")) throw ConfigError("config: 'graph.factors' is required");
    std::vector<GraphTopology> factors;
    for (const auto& f : g.at("factors")) factors.push_back(parse_graph(f));
    return GraphTopology::cartesian(std::move(factors));
  }
  if (kind == "custom") {
    if (!g.contains("edges")) throw ConfigError("config: 'graph.edges' is required");
    std::vector<GraphTopology::Edge> edges;
    for (const auto& e : g.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw ConfigError("config: 'graph.edges' entries must be [i, j] pairs");
      edges.emplace_back(as_int(e[0], "graph.edges"), as_int(e[1], "graph.edges"));
    }
    return GraphTopology::custom(as_int(g.at("nodes"), "graph.nodes"), std::move(edges));
  }
  throw ConfigError("config: unknown graph kind '" + kind + "'");
}

}  // namespace

ScenarioConfig parse_config_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: JSON parse error: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config: top level must be an object");
  reject_unknown_keys(root, "<top>",
                      {"command", "model", "graph", "pde", "norm", "diffusion", "shift",
                       "sampler", "search", "run", "output"});

  ScenarioConfig cfg;
  if (!root.contains("command")) throw ConfigError("config: 'command' is required");
  cfg.command = root.at("command").get<std::string>();
  static const std::set<std::string> commands = {"measure",       "spectrum", "certify",
                                                 "search-weight", "simulate", "pde"};
  if (!commands.count(cfg.command))
    throw ConfigError("config: unknown command '" + cfg.command + "'");

  if (root.contains("model")) {
    const json& m = root.at("model");
    reject_unknown_keys(m, "model", {"name", "params", "matrix", "signal"});
    if (!m.contains("name")) throw ConfigError("config: 'model.name' is required");
    cfg.model_name = m.at("name").get<std::string>();
    static const std::set<std::string> names = {"goodwin", "biochemical", "linear"};
    if (!names.count(cfg.model_name))
      throw ConfigError("config: unknown key 'model.name' value '" + cfg.model_name +
                        "' (expected goodwin, biochemical, or linear)");
    if (m.contains("params")) {
      for (auto it = m.at("params").begin(); it != m.at("params").end(); ++it)
        cfg.model_params[it.key()] = as_number(it.value(), "model.params." + it.key());
    }
    if (m.contains("matrix")) {
      const json& rows = m.at("matrix");
      const int n = static_cast<int>(rows.size());
      Matrix a(n, n);
      for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
          throw ConfigError("config: 'model.matrix' must be square");
        for (int j = 0; j < n; ++j) a(i, j) = as_number(rows[i][j], "model.matrix");
      }
      cfg.model_matrix = a;
    }
    if (m.contains("signal")) {
      const json& s = m.at("signal");
      reject_unknown_keys(s, "model.signal", {"offset", "amplitude", "frequency"});
      cfg.signal_offset = s.contains("offset") ? as_number(s.at("offset"), "signal.offset") : 0.0;
      cfg.signal_amplitude =
          s.contains("amplitude") ? as_number(s.at("amplitude"), "signal.amplitude") : 0.0;
      cfg.signal_frequency =
          s.contains("frequency") ? as_number(s.at("frequency"), "signal.frequency") : 0.0;
    }
  }

  if (root.contains("graph")) cfg.graph = parse_graph(root.at("graph"));

  if (root.contains("pde")) {
    const json& p = root.at("pde");
    reject_unknown_keys(p, "pde", {"length", "mesh", "bc"});
    cfg.pde_length = p.contains("length") ? as_number(p.at("length"), "pde.length") : 1.0;
    if (!p.contains("mesh")) throw ConfigError("config: 'pde.mesh' is required");
    cfg.pde_mesh = as_int(p.at("mesh"), "pde.mesh");
    const std::string bc = p.contains("bc") ? p.at("bc").get<std::string>() : "neumann";
    if (bc == "neumann")
      cfg.pde_bc = Boundary::Neumann;
    else if (bc == "dirichlet")
      cfg.pde_bc = Boundary::Dirichlet;
    else
      throw ConfigError("config: 'pde.bc' must be neumann or dirichlet");
  }

  if (root.contains("norm")) {
    const json& n = root.at("norm");
    reject_unknown_keys(n, "norm", {"p", "weights"});
    if (n.contains("p")) cfg.p = parse_p(n.at("p"));
    if (n.contains("weights")) cfg.weights = as_vec(n.at("weights"), "norm.weights");
  }

  if (root.contains("diffusion")) {
    const json& d = root.at("diffusion");
    reject_unknown_keys(d, "diffusion", {"d"});
    if (!d.contains("d")) throw ConfigError("config: 'diffusion.d' is required");
    cfg.diffusion = as_vec(d.at("d"), "diffusion.d");
  }

  if (root.contains("shift")) {
    const json& s = root.at("shift");
    reject_unknown_keys(s, "shift", {"lambda"});
    if (s.contains("lambda")) cfg.lambda = as_number(s.at("lambda"), "shift.lambda");
  }

  if (root.contains("sampler")) {
    const json& s = root.at("sampler");
    reject_unknown_keys(s, "sampler", {"strategy", "points", "count", "seed", "box", "times"});
    if (!s.contains("strategy")) throw ConfigError("config: 'sampler.strategy' is required");
    const std::string strat = s.at("strategy").get<std::string>();
    if (strat == "grid") {
      if (!s.contains("points")) throw ConfigError("config: 'sampler.points' is required");
      cfg.sampler = GridStrategy{as_int(s.at("points"), "sampler.points")};
    } else if (strat == "random") {
      if (!s.contains("count")) throw ConfigError("config: 'sampler.count' is required");
      if (!s.contains("seed"))
        throw ConfigError("config: 'sampler.seed' is mandatory for randomized samplers");
      cfg.sampler = RandomStrategy{as_int(s.at("count"), "sampler.count"),
                                   static_cast<std::uint64_t>(as_int(s.at("seed"), "sampler.seed"))};
    } else {
      throw ConfigError("config: 'sampler.strategy' must be grid or random");
    }
    if (s.contains("box")) cfg.sample_box = as_box(s.at("box"), "sampler.box");
    if (s.contains("times")) {
      const json& t = s.at("times");
      reject_unknown_keys(t, "sampler.times", {"start", "end", "count"});
      cfg.sample_times = time_grid(as_number(t.at("start"), "times.start"),
                                   as_number(t.at("end"), "times.end"),
                                   as_int(t.at("count"), "times.count"));
    }
  }

  if (root.contains("search")) {
    const json& s = root.at("search");
    reject_unknown_keys(s, "search", {"budget", "seed"});
    if (s.contains("budget")) cfg.search_budget = as_int(s.at("budget"), "search.budget");
    if (s.contains("seed")) {
      cfg.search_seed = static_cast<std::uint64_t>(as_int(s.at("seed"), "search.seed"));
      cfg.has_search_seed = true;
    }
  }

  if (root.contains("run")) {
    const json& r = root.at("run");
    reject_unknown_keys(r, "run",
                        {"t_end", "dt", "stride", "slack", "initial", "profile", "bound"});
    if (r.contains("t_end")) cfg.t_end = as_number(r.at("t_end"), "run.t_end");
    if (r.contains("dt")) cfg.dt = as_number(r.at("dt"), "run.dt");
    if (r.contains("stride")) cfg.stride = as_int(r.at("stride"), "run.stride");
    if (r.contains("slack")) cfg.slack = as_number(r.at("slack"), "run.slack");
    if (r.contains("initial")) {
      const json& init = r.at("initial");
      if (init.is_array()) {
        for (const auto& row : init) cfg.initial_states.push_back(as_vec(row, "run.initial"));
      } else if (init.is_object()) {
        reject_unknown_keys(init, "run.initial", {"seed", "box"});
        if (!init.contains("seed") || !init.contains("box"))
          throw ConfigError("config: random 'run.initial' needs both seed and box");
        cfg.initial_seed = static_cast<std::uint64_t>(as_int(init.at("seed"), "run.initial.seed"));
        cfg.initial_box = as_box(init.at("box"), "run.initial.box");
      } else {
        throw ConfigError("config: 'run.initial' must be an array or an object");
      }
    }
    if (r.contains("profile")) {
      const json& p = r.at("profile");
      reject_unknown_keys(p, "run.profile", {"offset", "amplitude", "mode"});
      if (p.contains("offset")) cfg.profile_offset = as_vec(p.at("offset"), "profile.offset");
      if (p.contains("amplitude"))
        cfg.profile_amplitude = as_vec(p.at("amplitude"), "profile.amplitude");
      if (p.contains("mode")) cfg.profile_mode = as_int(p.at("mode"), "profile.mode");
    }
    if (r.contains("bound")) {
      const json& b = r.at("bound");
      reject_unknown_keys(b, "run.bound", {"kind", "c", "alpha", "beta"});
      BoundForm bound;
      const std::string kind = b.contains("kind") ? b.at("kind").get<std::string>() : "exponential";
      if (kind == "exponential")
        bound.kind = BoundForm::Kind::Exponential;
      else if (kind == "star-affine")
        bound.kind = BoundForm::Kind::StarAffine;
      else if (kind == "grid-affine")
        bound.kind = BoundForm::Kind::GridAffine;
      else
        throw ConfigError("config: unknown bound kind '" + kind + "'");
      if (!b.contains("c")) throw ConfigError("config: 'run.bound.c' is required");
      bound.c = as_number(b.at("c"), "run.bound.c");
      if (b.contains("alpha")) bound.alpha = as_number(b.at("alpha"), "run.bound.alpha");
      if (b.contains("beta")) bound.beta = as_number(b.at("beta"), "run.bound.beta");
      cfg.bound = bound;
    }
  }

  if (root.contains("output")) cfg.output = root.at("output").get<std::string>();
  return cfg;
}

ScenarioConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

Model build_model(const ScenarioConfig& cfg) {
  if (cfg.model_name.empty()) throw ConfigError("config: 'model' block is required");
  try {
    if (cfg.model_name == "linear") {
      if (!cfg.model_matrix) throw ConfigError("config: linear model needs 'model.matrix'");
      return linear_model(*cfg.model_matrix);
    }
    std::optional<Signal> signal;
    if (cfg.signal_offset) {
      const double off = *cfg.signal_offset, amp = *cfg.signal_amplitude,
                   freq = *cfg.signal_frequency;
      signal = [off, amp, freq](double t) { return off + amp * std::sin(freq * t); };
    }
    return make_model(cfg.model_name, cfg.model_params, signal);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const UnsupportedError& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

}  // namespace syncert
