#pragma once

#include <utility>
#include <vector>

#include "syncert/matrix.hpp"
#include "syncert/measures.hpp"

namespace syncert {

enum class GraphKind { Line, Complete, Star, Grid, Cartesian, Custom };

// An undirected connected interconnection topology. Edges are kept in
// canonical form: each edge stored as (tail, head) with tail < head, the
// list sorted lexicographically. That fixes the incidence orientation and
// makes every derived object byte-reproducible.
class GraphTopology {
 public:
  using Edge = std::pair<int, int>;

  static GraphTopology line(int n);
  static GraphTopology complete(int n);
  static GraphTopology star(int n);  // n total nodes, hub at the last index
  static GraphTopology grid(int n1, int n2);
  static GraphTopology cartesian(std::vector<GraphTopology> factors);
  static GraphTopology custom(int n, std::vector<Edge> edges);

  GraphKind kind() const { return kind_; }
  int nodes() const { return nodes_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<GraphTopology>& factors() const { return factors_; }
  bool is_tree() const { return edge_count() == nodes_ - 1; }

 private:
  GraphTopology() = default;
  GraphKind kind_ = GraphKind::Custom;
  int nodes_ = 0;
  std::vector<Edge> edges_;
  std::vector<GraphTopology> factors_;  // Grid and Cartesian only
};

// Graph Laplacian. Grid/Cartesian kinds assemble the Kronecker sum
// sum_i I x ... x L_i x ... x I (factor 1 in the fastest-varying slot);
// everything else is degree minus adjacency over the canonical edges.
Matrix laplacian(const GraphTopology& g);

// N x m directed incidence matrix under the canonical orientation; column k
// has -1 at the tail and +1 at the head of edge k. Satisfies E E^T = L.
Matrix incidence(const GraphTopology& g);

enum class KMode { EdgeLaplacian, CompleteShortcut };

// An m x m matrix K with E^T L = K E^T. EdgeLaplacian returns E^T E (any
// graph); CompleteShortcut returns N*I and is valid for complete graphs only.
Matrix k_matrix(const GraphTopology& g, KMode mode);

// Algebraic connectivity by closed form: line 4 sin^2(pi/2N), complete N,
// star 1 (2 when the star degenerates to a single edge), grid/Cartesian the
// minimum over factors. Custom graphs are unsupported; use numeric_spectrum.
double lambda2_closed_form(const GraphTopology& g);

// Eigenvalues of the n x n tridiagonal matrix with diagonal
// (a+v, v, ..., v, b+v), subdiagonal s and superdiagonal t, by closed form.
// Supported cases: a=b=0, or a=b=sigma with sigma=sqrt(st). Requires st >= 0.
// Returned ascending.
Vec tridiagonal_spectrum(double v, double a, double b, double s, double t, int n);

struct LineEdgeWeights {
  Vec perron;  // p_k = sin(k pi / N), k = 1..N-1
  Vec qp;      // Q_p diagonal: p_k^((2-p)/p); for p=inf, 1/p_k
};
LineEdgeWeights line_edge_weights(int n, PNorm p);

// All eigenvalues of a symmetric matrix, ascending (cyclic Jacobi).
Vec numeric_spectrum(const Matrix& s);

}  // namespace syncert
