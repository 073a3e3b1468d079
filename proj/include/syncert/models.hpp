#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "syncert/matrix.hpp"

namespace syncert {

struct Interval {
  double lo;
  double hi;  // may be +infinity
  bool finite() const;
};

// A vector field with an analytic Jacobian and a (possibly half-infinite)
// invariant state box. Models are immutable after construction; rhs and
// jacobian are reentrant.
struct Model {
  std::string name;
  int dim = 0;
  std::function<Vec(const Vec&, double)> rhs;
  std::function<Matrix(const Vec&, double)> jacobian;
  std::vector<Interval> domain;
  std::map<std::string, double> params;
};

struct GoodwinParams {
  double a = 150.0;
  double k = 1.0;
  double b = 0.2;
  double alpha = 0.2;
  double beta = 0.2;
  double gamma = 0.2;
  double delta = 15.0;
  double k_m = 1.0;
};

struct BiochemicalParams {
  double delta = 20.0;
  double k1 = 0.5;
  double k2 = 5.0;
  double s_y = 0.1;
};

using Signal = std::function<double(double)>;

Signal default_biochemical_signal();  // z(t) = 20 (1 + sin(10 t))

Model goodwin_model(const GoodwinParams& p = {});
Model biochemical_model(const BiochemicalParams& p = {}, Signal z = default_biochemical_signal());
Model linear_model(const Matrix& a);
Model linear_tv_model(std::function<Matrix(double)> a_of_t, int dim);

// Dispatch by name for config-driven use: "goodwin" and "biochemical" take
// their parameters from the map (missing entries keep defaults); unknown
// names are unsupported. Linear models are built via linear_model directly.
Model make_model(const std::string& name, const std::map<std::string, double>& params,
                 std::optional<Signal> signal = std::nullopt);

// Analytic Jacobian at (x, t); throws std::domain_error when x is outside
// the model's state box.
Matrix jacobian_at(const Model& m, const Vec& x, double t);

// Test oracle: central finite-difference Jacobian of the rhs.
Matrix finite_difference_jacobian(const Model& m, const Vec& x, double t, double step = 1e-6);

// ---- Domain sampling ------------------------------------------------------

struct Box {
  std::vector<Interval> axes;  // all finite
};

struct GridStrategy {
  int points_per_axis;  // >= 2 so the box corners are always included
};

struct RandomStrategy {
  int count;
  std::uint64_t seed;
};

using SampleStrategy = std::variant<GridStrategy, RandomStrategy>;

struct Sample {
  Vec x;
  double t;
};

// Uniform time grid over [t0, t1] with `count` points, endpoints included.
// count = 1 collapses to {t0}.
std::vector<double> time_grid(double t0, double t1, int count);

// Deterministic (state, time) samples over a finite box. The box override is
// required when any model domain axis is half-infinite. Both strategies
// include every box corner; random states are drawn from a seeded generator
// on top of the corners. Each state is paired with each time.
std::vector<Sample> sample_domain(const Model& m, const SampleStrategy& strategy,
                                  const std::optional<Box>& box_override,
                                  const std::vector<double>& times = {0.0});

}  // namespace syncert
