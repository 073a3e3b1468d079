#include "syncert/models.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "syncert/errors.hpp"

namespace syncert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(const std::map<std::string, double>& params,
                      std::initializer_list<const char*> keys) {
  for (const char* k : keys) {
    auto it = params.find(k);
    if (it != params.end() && !(it->second > 0.0))
      throw std::invalid_argument(std::string("model parameter '") + k + "' must be positive");
  }
}

double get_or(const std::map<std::string, double>& params, const std::string& key, double dflt) {
  auto it = params.find(key);
  return it == params.end() ? dflt : it->second;
}

}  // namespace

bool Interval::finite() const { return std::isfinite(lo) && std::isfinite(hi); }

Signal default_biochemical_signal() {
  return [](double t) { return 20.0 * (1.0 + std::sin(10.0 * t)); };
}

Model goodwin_model(const GoodwinParams& p) {
  for (double v : {p.a, p.k, p.b, p.alpha, p.beta, p.gamma, p.delta, p.k_m})
    if (!(v > 0.0)) throw std::invalid_argument("goodwin_model: parameters must be positive");
  Model m;
  m.name = "goodwin";
  m.dim = 3;
  m.params = {{"a", p.a},     {"k", p.k},         {"b", p.b},         {"alpha", p.alpha},
              {"beta", p.beta}, {"gamma", p.gamma}, {"delta", p.delta}, {"k_m", p.k_m}};
  m.domain = {{0.0, kInf}, {0.0, kInf}, {0.0, kInf}};
  m.rhs = [p](const Vec& x, double) -> Vec {
    return {p.a / (p.k + x[2]) - p.b * x[0],
            p.alpha * x[0] - p.beta * x[1],
            p.gamma * x[1] - p.delta * x[2] / (p.k_m + x[2])};
  };
  m.jacobian = [p](const Vec& x, double) -> Matrix {
    const double kz = p.k + x[2];
    const double mz = p.k_m + x[2];
    Matrix j(3, 3);
    j(0, 0) = -p.b;
    j(0, 2) = -p.a / (kz * kz);
    j(1, 0) = p.alpha;
    j(1, 1) = -p.beta;
    j(2, 1) = p.gamma;
    j(2, 2) = -p.delta * p.k_m / (mz * mz);
    return j;
  };
  return m;
}

Model biochemical_model(const BiochemicalParams& p, Signal z) {
  for (double v : {p.delta, p.k1, p.k2, p.s_y})
    if (!(v > 0.0)) throw std::invalid_argument("biochemical_model: parameters must be positive");
  if (!z) throw std::invalid_argument("biochemical_model: missing input signal z(t)");
  Model m;
  m.name = "biochemical";
  m.dim = 2;
  m.params = {{"delta", p.delta}, {"k1", p.k1}, {"k2", p.k2}, {"s_y", p.s_y}};
  m.domain = {{0.0, kInf}, {0.0, p.s_y}};
  m.rhs = [p, z](const Vec& x, double t) -> Vec {
    const double bound = p.k2 * (p.s_y - x[1]) * x[0];
    return {z(t) - p.delta * x[0] + p.k1 * x[1] - bound, -p.k1 * x[1] + bound};
  };
  m.jacobian = [p](const Vec& x, double) -> Matrix {
    const double a = p.k2 * (p.s_y - x[1]);
    const double b = p.k1 + p.k2 * x[0];
    Matrix j(2, 2);
    j(0, 0) = -p.delta - a;
    j(0, 1) = b;
    j(1, 0) = a;
    j(1, 1) = -b;
    return j;
  };
  return m;
}

Model linear_model(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("linear_model: matrix must be square");
  Model m;
  m.name = "linear";
  m.dim = a.rows();
  m.domain.assign(m.dim, Interval{-kInf, kInf});
  m.rhs = [a](const Vec& x, double) { return a.apply(x); };
  m.jacobian = [a](const Vec&, double) { return a; };
  return m;
}

Model linear_tv_model(std::function<Matrix(double)> a_of_t, int dim) {
  if (!a_of_t) throw std::invalid_argument("linear_tv_model: missing matrix callback");
  if (dim < 1) throw std::invalid_argument("linear_tv_model: dimension must be >= 1");
  Model m;
  m.name = "linear_tv";
  m.dim = dim;
  m.domain.assign(dim, Interval{-kInf, kInf});
  m.rhs = [a_of_t](const Vec& x, double t) { return a_of_t(t).apply(x); };
  m.jacobian = [a_of_t](const Vec&, double t) { return a_of_t(t); };
  return m;
}

Model make_model(const std::string& name, const std::map<std::string, double>& params,
                 std::optional<Signal> signal) {
  if (name == "goodwin") {
    require_positive(params, {"a", "k", "b", "alpha", "beta", "gamma", "delta", "k_m"});
    GoodwinParams p;
    p.a = get_or(params, "a", p.a);
    p.k = get_or(params, "k", p.k);
    p.b = get_or(params, "b", p.b);
    p.alpha = get_or(params, "alpha", p.alpha);
    p.beta = get_or(params, "beta", p.beta);
    p.gamma = get_or(params, "gamma", p.gamma);
    p.delta = get_or(params, "delta", p.delta);
    p.k_m = get_or(params, "k_m", p.k_m);
    return goodwin_model(p);
  }
  if (name == "biochemical") {
    require_positive(params, {"delta", "k1", "k2", "s_y"});
    BiochemicalParams p;
    p.delta = get_or(params, "delta", p.delta);
    p.k1 = get_or(params, "k1", p.k1);
    p.k2 = get_or(params, "k2", p.k2);
    p.s_y = get_or(params, "s_y", p.s_y);
    return biochemical_model(p, signal ? *signal : default_biochemical_signal());
  }
  throw UnsupportedError("make_model: unknown model name '" + name + "'");
}

Matrix jacobian_at(const Model& m, const Vec& x, double t) {
  if (static_cast<int>(x.size()) != m.dim)
    throw std::invalid_argument("jacobian_at: state dimension mismatch");
  for (int i = 0; i < m.dim; ++i) {
    const auto& iv = m.domain[i];
    if (x[i] < iv.lo - 1e-12 || x[i] > iv.hi + 1e-12)
      throw std::domain_error("jacobian_at: state outside model domain");
  }
  return m.jacobian(x, t);
}

Matrix finite_difference_jacobian(const Model& m, const Vec& x, double t, double step) {
  Matrix j(m.dim, m.dim);
  for (int col = 0; col < m.dim; ++col) {
    Vec xp = x, xm = x;
    xp[col] += step;
    xm[col] -= step;
    const Vec fp = m.rhs(xp, t);
    const Vec fm = m.rhs(xm, t);
    for (int row = 0; row < m.dim; ++row) j(row, col) = (fp[row] - fm[row]) / (2.0 * step);
  }
  return j;
}

std::vector<double> time_grid(double t0, double t1, int count) {
  if (count < 1) throw std::invalid_argument("time_grid: count must be >= 1");
  if (count == 1) return {t0};
  std::vector<double> ts(count);
  for (int i = 0; i < count; ++i) ts[i] = t0 + (t1 - t0) * i / (count - 1);
  ts.front() = t0;
  ts.back() = t1;
  return ts;
}

std::vector<Sample> sample_domain(const Model& m, const SampleStrategy& strategy,
                                  const std::optional<Box>& box_override,
                                  const std::vector<double>& times) {
  Box box;
  if (box_override) {
    box = *box_override;
    if (static_cast<int>(box.axes.size()) != m.dim)
      throw std::invalid_argument("sample_domain: box dimension mismatch");
  } else {
    box.axes = m.domain;
  }
  for (const auto& iv : box.axes) {
    if (!iv.finite() || iv.lo > iv.hi)
      throw std::invalid_argument(
          "sample_domain: a finite sampling box is required (pass an explicit box for "
          "half-infinite domains)");
  }
  if (times.empty()) throw std::invalid_argument("sample_domain: need at least one time");

  const int n = m.dim;
  std::vector<Vec> states;

  if (std::holds_alternative<GridStrategy>(strategy)) {
    // A grid with >= 2 points per axis contains every box corner.
    const int k = std::get<GridStrategy>(strategy).points_per_axis;
    if (k < 2) throw std::invalid_argument("sample_domain: grid needs >= 2 points per axis");
    std::vector<int> idx(n, 0);
    while (true) {
      Vec x(n);
      for (int i = 0; i < n; ++i)
        x[i] = box.axes[i].lo + (box.axes[i].hi - box.axes[i].lo) * idx[i] / (k - 1);
      states.push_back(std::move(x));
      int axis = 0;
      while (axis < n && ++idx[axis] == k) idx[axis++] = 0;
      if (axis == n) break;
    }
  } else {
    const auto& rs = std::get<RandomStrategy>(strategy);
    if (rs.count < 0) throw std::invalid_argument("sample_domain: negative sample count");
    // Corners first, then the seeded draws.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      Vec x(n);
      for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1 ? box.axes[i].hi : box.axes[i].lo;
      states.push_back(std::move(x));
    }
    std::mt19937_64 rng(rs.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int s = 0; s < rs.count; ++s) {
      Vec x(n);
      for (int i = 0; i < n; ++i)
        x[i] = box.axes[i].lo + (box.axes[i].hi - box.axes[i].lo) * unit(rng);
      states.push_back(std::move(x));
    }
  }

  std::vector<Sample> samples;
  samples.reserve(states.size() * times.size());
  for (const auto& x : states)
    for (double t : times) samples.push_back({x, t});
  return samples;
}

}  // namespace syncert
