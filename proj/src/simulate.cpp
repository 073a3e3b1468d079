#include "syncert/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "syncert/eigen.hpp"
#include "syncert/errors.hpp"

namespace syncert {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool all_finite(const Vec& x) {
  return std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); });
}

void require_some_diffusion(const Vec& d, const char* who) {
  for (double v : d)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::invalid_argument(std::string(who) + ": diffusion entries must be >= 0");
  if (std::all_of(d.begin(), d.end(), [](double v) { return v == 0.0; }))
    throw std::invalid_argument(std::string(who) + ": at least one diffusion entry must be > 0");
}

}  // namespace

Vec NetworkSystem::rhs(const Vec& x, double t) const {
  if (rhs_override) return rhs_override(x, t);
  const int n = model.dim;
  Vec out(static_cast<std::size_t>(compartments) * n);
  Vec xi(n), mix(n);
  for (int i = 0; i < compartments; ++i) {
    std::copy(x.begin() + static_cast<std::size_t>(i) * n,
              x.begin() + static_cast<std::size_t>(i + 1) * n, xi.begin());
    const Vec f = model.rhs(xi, t);
    std::fill(mix.begin(), mix.end(), 0.0);
    for (int j = 0; j < compartments; ++j) {
      const double cij = coupling(i, j);
      if (cij == 0.0) continue;
      const std::size_t off = static_cast<std::size_t>(j) * n;
      for (int k = 0; k < n; ++k) mix[k] += cij * x[off + k];
    }
    const std::size_t off = static_cast<std::size_t>(i) * n;
    for (int k = 0; k < n; ++k) out[off + k] = f[k] - d[k] * mix[k];
  }
  return out;
}

NetworkSystem assemble_network(const Model& m, const GraphTopology& g, const Vec& d) {
  if (static_cast<int>(d.size()) != m.dim)
    throw std::invalid_argument("assemble_network: diffusion dimension mismatch");
  for (double v : d)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::invalid_argument("assemble_network: diffusion entries must be >= 0");
  NetworkSystem sys;
  sys.model = m;
  sys.compartments = g.nodes();
  sys.coupling = laplacian(g);
  sys.d = d;
  return sys;
}

NetworkSystem single_compartment(const Model& m) {
  NetworkSystem sys;
  sys.model = m;
  sys.compartments = 1;
  sys.coupling = Matrix(1, 1);
  sys.d = Vec(m.dim, 0.0);
  return sys;
}

NetworkSystem two_compartment_network(const Model& m, std::function<Vec(const Vec&)> h1,
                                      std::function<Vec(const Vec&)> h2) {
  if (!h1 || !h2)
    throw std::invalid_argument("two_compartment_network: missing coupling function");
  NetworkSystem sys;
  sys.model = m;
  sys.compartments = 2;
  sys.coupling = Matrix(2, 2);
  sys.d = Vec(m.dim, 0.0);
  const int n = m.dim;
  Model model = m;
  sys.rhs_override = [model, h1, h2, n](const Vec& x, double t) -> Vec {
    Vec x1(x.begin(), x.begin() + n), x2(x.begin() + n, x.end());
    const Vec f1 = model.rhs(x1, t), f2 = model.rhs(x2, t);
    const Vec h1x1 = h1(x1), h1x2 = h1(x2), h2x1 = h2(x1), h2x2 = h2(x2);
    Vec out(2 * n);
    for (int k = 0; k < n; ++k) {
      out[k] = f1[k] + h1x2[k] - h1x1[k];
      out[n + k] = f2[k] + h2x1[k] - h2x2[k];
    }
    return out;
  };
  return sys;
}

NetworkSystem discretize_pde_1d(const Model& m, const Vec& d, double length, int mesh,
                                Boundary bc) {
  if (mesh < 3) throw std::invalid_argument("discretize_pde_1d: need at least 3 mesh points");
  if (!(length > 0.0)) throw std::invalid_argument("discretize_pde_1d: length must be positive");
  if (static_cast<int>(d.size()) != m.dim)
    throw std::invalid_argument("discretize_pde_1d: diffusion dimension mismatch");
  require_some_diffusion(d, "discretize_pde_1d");
  if (bc == Boundary::None)
    throw std::invalid_argument("discretize_pde_1d: boundary must be Neumann or Dirichlet");

  const double scale = (mesh + 1) * (mesh + 1) / (length * length);
  Matrix c(mesh, mesh);
  for (int i = 0; i < mesh; ++i) {
    c(i, i) = 2.0;
    if (i > 0) c(i, i - 1) = -1.0;
    if (i + 1 < mesh) c(i, i + 1) = -1.0;
  }
  if (bc == Boundary::Neumann) {
    // Ghost values x_0 = x_1 and x_{N+1} = x_N fold into the end rows.
    c(0, 0) = 1.0;
    c(mesh - 1, mesh - 1) = 1.0;
  }
  NetworkSystem sys;
  sys.model = m;
  sys.compartments = mesh;
  sys.coupling = c.scaled(scale);
  sys.d = d;
  sys.boundary = bc;
  sys.length = length;
  return sys;
}

Trajectory integrate_rk4(const NetworkSystem& sys, const Vec& x0, double t_end, double dt,
                         int stride) {
  if (!(dt > 0.0)) throw std::invalid_argument("integrate_rk4: dt must be positive");
  if (t_end < dt) throw std::invalid_argument("integrate_rk4: t_end must be >= dt");
  if (stride < 1) throw std::invalid_argument("integrate_rk4: stride must be >= 1");
  if (static_cast<int>(x0.size()) != sys.total_dim())
    throw std::invalid_argument("integrate_rk4: initial state dimension mismatch");
  if (!all_finite(x0)) throw std::invalid_argument("integrate_rk4: non-finite initial state");

  const long steps = std::lround(t_end / dt);
  const std::size_t dim = x0.size();

  Trajectory traj;
  traj.dt = dt;
  traj.stride = stride;
  traj.initial = x0;
  traj.times.reserve(steps / stride + 2);
  traj.states.reserve(steps / stride + 2);

  Vec x = x0;
  traj.times.push_back(0.0);
  traj.states.push_back(x);

  Vec xs(dim);
  for (long step = 0; step < steps; ++step) {
    const double t = step * dt;
    const Vec k1 = sys.rhs(x, t);
    for (std::size_t i = 0; i < dim; ++i) xs[i] = x[i] + 0.5 * dt * k1[i];
    const Vec k2 = sys.rhs(xs, t + 0.5 * dt);
    for (std::size_t i = 0; i < dim; ++i) xs[i] = x[i] + 0.5 * dt * k2[i];
    const Vec k3 = sys.rhs(xs, t + 0.5 * dt);
    for (std::size_t i = 0; i < dim; ++i) xs[i] = x[i] + dt * k3[i];
    const Vec k4 = sys.rhs(xs, t + dt);
    for (std::size_t i = 0; i < dim; ++i)
      x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

    if (!all_finite(x))
      throw DivergenceError("integrate_rk4: state diverged", t);

    if ((step + 1) % stride == 0 || step + 1 == steps) {
      traj.times.push_back((step + 1) * dt);
      traj.states.push_back(x);
    }
  }
  return traj;
}

std::vector<double> edge_series(const Trajectory& traj, const GraphTopology& g,
                                const NormSpec& norm, const Vec* phi) {
  if (phi && static_cast<int>(phi->size()) != g.edge_count())
    throw std::invalid_argument("edge_series: weight vector length mismatch");
  const int n = norm.dim();
  std::vector<double> out;
  out.reserve(traj.states.size());
  Vec diff(n);
  for (const Vec& x : traj.states) {
    if (static_cast<int>(x.size()) != g.nodes() * n)
      throw std::invalid_argument("edge_series: state/graph dimension mismatch");
    double sum = 0.0;
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto& [a, b] = g.edges()[e];
      for (int k = 0; k < n; ++k)
        diff[k] = x[static_cast<std::size_t>(a) * n + k] - x[static_cast<std::size_t>(b) * n + k];
      sum += (phi ? (*phi)[e] : 1.0) * vector_norm(diff, norm);
    }
    out.push_back(sum);
  }
  return out;
}

std::vector<double> deviation_series(const Trajectory& traj, const NormSpec& norm) {
  const int n = norm.dim();
  std::vector<double> out;
  out.reserve(traj.states.size());
  for (const Vec& x : traj.states) {
    if (x.size() % n != 0)
      throw std::invalid_argument("deviation_series: state/norm dimension mismatch");
    const int comp = static_cast<int>(x.size()) / n;
    Vec mean(n, 0.0);
    for (int i = 0; i < comp; ++i)
      for (int k = 0; k < n; ++k) mean[k] += x[static_cast<std::size_t>(i) * n + k];
    for (double& v : mean) v /= comp;

    // Stacked deviation norm with I x Q weights.
    double acc = 0.0;
    for (int i = 0; i < comp; ++i)
      for (int k = 0; k < n; ++k) {
        const double v = norm.weights[k] * (x[static_cast<std::size_t>(i) * n + k] - mean[k]);
        switch (norm.p) {
          case PNorm::One:
            acc += std::abs(v);
            break;
          case PNorm::Two:
            acc += v * v;
            break;
          case PNorm::Inf:
            acc = std::max(acc, std::abs(v));
            break;
        }
      }
    out.push_back(norm.p == PNorm::Two ? std::sqrt(acc) : acc);
  }
  return out;
}

double BoundForm::envelope(double t) const {
  switch (kind) {
    case Kind::Exponential:
      return std::exp(c * t);
    case Kind::StarAffine:
      return (1.0 + alpha * t) * std::exp(c * t);
    case Kind::GridAffine:
      return (alpha + beta * t) * std::exp(c * t);
  }
  return 0.0;
}

BoundReport verify_bound(const std::vector<double>& times, const std::vector<double>& series,
                         const BoundForm& bound, double slack) {
  if (times.empty() || times.size() != series.size())
    throw std::invalid_argument("verify_bound: empty or mismatched series");
  if (slack < 0.0) throw std::invalid_argument("verify_bound: slack must be >= 0");
  const double s0 = series.front();
  if (s0 == 0.0) return {true, 0.0, times.front()};

  BoundReport rep;
  rep.pass = true;
  rep.argmax_t = times.front();
  for (std::size_t k = 0; k < series.size(); ++k) {
    const double env = bound.envelope(times[k] - times.front());
    const double ratio = series[k] / (env * s0);
    if (ratio > rep.max_ratio) {
      rep.max_ratio = ratio;
      rep.argmax_t = times[k];
    }
  }
  rep.pass = rep.max_ratio <= 1.0 + slack;
  return rep;
}

BoundForm fit_grid_affine(const std::vector<double>& times, const std::vector<double>& series,
                          double c, double slack) {
  if (times.empty() || times.size() != series.size())
    throw std::invalid_argument("fit_grid_affine: empty or mismatched series");
  BoundForm bound;
  bound.kind = BoundForm::Kind::GridAffine;
  bound.c = c;
  bound.alpha = 1.0;
  bound.beta = 0.0;
  const double s0 = series.front();
  if (s0 == 0.0) return bound;
  for (std::size_t k = 1; k < series.size(); ++k) {
    const double tau = times[k] - times.front();
    if (tau <= 0.0) continue;
    const double needed =
        (series[k] * std::exp(-c * tau) / (s0 * (1.0 + slack)) - bound.alpha) / tau;
    bound.beta = std::max(bound.beta, needed);
  }
  return bound;
}

double weighted_gradient_norm(const Vec& state, double length, const NormSpec& norm) {
  const int n = norm.dim();
  if (state.empty() || state.size() % n != 0)
    throw std::invalid_argument("weighted_gradient_norm: state/norm dimension mismatch");
  const int mesh = static_cast<int>(state.size()) / n;
  if (mesh < 2) return 0.0;
  const double h = length / (mesh + 1);
  Vec grad(n);
  double sum = 0.0;
  for (int k = 0; k + 1 < mesh; ++k) {
    const double mid = (k + 1.5) * h;  // midpoint of (w_{k+1}, w_{k+2})
    for (int j = 0; j < n; ++j)
      grad[j] = (state[static_cast<std::size_t>(k + 1) * n + j] -
                 state[static_cast<std::size_t>(k) * n + j]) /
                h;
    sum += std::sin(kPi * mid / length) * vector_norm(grad, norm) * h;
  }
  return sum;
}

ModalBasis modal_basis(const GraphTopology& g) {
  const SymmetricEigen eig = symmetric_eigen(laplacian(g));
  return {eig.values, eig.vectors};
}

Matrix modal_decompose(const Vec& x, const ModalBasis& basis, int dim) {
  const int comp = basis.vectors.rows();
  if (static_cast<int>(x.size()) != comp * dim)
    throw std::invalid_argument("modal_decompose: state dimension mismatch");
  Matrix coeffs(comp, dim);
  for (int i = 0; i < comp; ++i)
    for (int j = 0; j < dim; ++j) {
      double acc = 0.0;
      for (int k = 0; k < comp; ++k)
        acc += basis.vectors(k, i) * x[static_cast<std::size_t>(k) * dim + j];
      coeffs(i, j) = acc;
    }
  return coeffs;
}

Vec modal_reconstruct(const Matrix& coeffs, const ModalBasis& basis, int dim) {
  const int comp = basis.vectors.rows();
  Vec x(static_cast<std::size_t>(comp) * dim, 0.0);
  for (int k = 0; k < comp; ++k)
    for (int j = 0; j < dim; ++j) {
      double acc = 0.0;
      for (int i = 0; i < comp; ++i) acc += basis.vectors(k, i) * coeffs(i, j);
      x[static_cast<std::size_t>(k) * dim + j] = acc;
    }
  return x;
}

}  // namespace syncert
