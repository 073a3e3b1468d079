#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "syncert/graphs.hpp"
#include "syncert/matrix.hpp"
#include "syncert/measures.hpp"
#include "syncert/models.hpp"

namespace syncert {

enum class Boundary { None, Neumann, Dirichlet };

// N copies of a model coupled through a matrix C as
//   xdot = F~(x, t) - (C x D) x        (Kronecker coupling, D diagonal)
// C is the graph Laplacian for networks, or the (N+1)^2/L^2-scaled mesh
// operator for 1-D PDE discretizations. Two-compartment systems with
// nonlinear couplings install a custom right-hand side instead.
struct NetworkSystem {
  Model model;
  int compartments = 0;
  Matrix coupling;
  Vec d;
  Boundary boundary = Boundary::None;
  double length = 0.0;  // PDE domain length; 0 for graph networks
  std::function<Vec(const Vec&, double)> rhs_override;

  int total_dim() const { return compartments * model.dim; }
  Vec rhs(const Vec& x, double t) const;
};

NetworkSystem assemble_network(const Model& m, const GraphTopology& g, const Vec& d);

// A lone copy of the model with no coupling; the reference for spatially
// uniform solutions.
NetworkSystem single_compartment(const Model& m);

// Two compartments exchanging through arbitrary coupling maps h1, h2:
//   x1dot = F(x1,t) + h1(x2) - h1(x1)
//   x2dot = F(x2,t) + h2(x1) - h2(x2)
NetworkSystem two_compartment_network(const Model& m, std::function<Vec(const Vec&)> h1,
                                      std::function<Vec(const Vec&)> h2);

// Method-of-lines discretization of u_t = F(u) + D u_ww on (0, L) with
// mesh points w_i = i L/(N+1), i = 1..N. Neumann uses the ghost-value line
// Laplacian; Dirichlet the fixed-zero-boundary tridiagonal. Both scale by
// ((N+1)/L)^2.
NetworkSystem discretize_pde_1d(const Model& m, const Vec& d, double length, int mesh,
                                Boundary bc);

struct Trajectory {
  std::vector<double> times;   // stored times (every stride-th step)
  std::vector<Vec> states;     // full network state per stored time
  double dt = 0.0;
  int stride = 1;
  Vec initial;
};

// Classical fixed-step RK4. Every step is computed; every stride-th step is
// stored (plus the final step). Throws DivergenceError with the last valid
// time if the state leaves the finite range.
Trajectory integrate_rk4(const NetworkSystem& sys, const Vec& x0, double t_end, double dt,
                         int stride = 1);

// Per-time weighted sum of edge-difference norms
//   sum_e phi_e ||x_tail(e) - x_head(e)||_{p,Q}.
// phi defaults to all ones; line graphs may pass the Perron edge weights.
std::vector<double> edge_series(const Trajectory& traj, const GraphTopology& g,
                                const NormSpec& norm, const Vec* phi = nullptr);

// Per-time norm of the stacked deviations from the compartment average in
// the I x Q weighted p-norm.
std::vector<double> deviation_series(const Trajectory& traj, const NormSpec& norm);

// Decay envelopes proved for the various topologies.
struct BoundForm {
  enum class Kind { Exponential, StarAffine, GridAffine };
  Kind kind = Kind::Exponential;
  double c = 0.0;
  double alpha = 0.0;  // StarAffine: (1 + alpha t) e^{ct}; GridAffine: (alpha + beta t) e^{ct}
  double beta = 0.0;

  double envelope(double t) const;
};

struct BoundReport {
  bool pass = false;
  double max_ratio = 0.0;  // max over samples of s(t) / (envelope(t) * s(0))
  double argmax_t = 0.0;
};

// Checks s(t_k) <= envelope(t_k - t_0) * s(0) * (1 + slack) at every stored
// time. s(0) = 0 passes vacuously.
BoundReport verify_bound(const std::vector<double>& times, const std::vector<double>& series,
                         const BoundForm& bound, double slack);

// Smallest (alpha, beta) with alpha >= 1, beta >= 0 making the GridAffine
// envelope hold with the given slack.
BoundForm fit_grid_affine(const std::vector<double>& times, const std::vector<double>& series,
                          double c, double slack);

// Midpoint-rule discretization of the sin-weighted spatial-gradient norm:
//   sum over adjacent mesh pairs of sin(pi * midpoint / L) * ||grad||_{p,Q} * h.
// `state` holds N mesh values of dimension norm.dim() at w_i = i L/(N+1).
double weighted_gradient_norm(const Vec& state, double length, const NormSpec& norm);

struct ModalBasis {
  Vec eigenvalues;  // Laplacian spectrum, ascending
  Matrix vectors;   // orthonormal eigenvectors, columns
};

ModalBasis modal_basis(const GraphTopology& g);

// Coefficients c_ij of x = sum_ij c_ij (v_i x e_j); rows index Laplacian
// modes, columns the model coordinates.
Matrix modal_decompose(const Vec& x, const ModalBasis& basis, int dim);
Vec modal_reconstruct(const Matrix& coeffs, const ModalBasis& basis, int dim);

}  // namespace syncert
