#include "syncert/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

#include "syncert/eigen.hpp"
#include "syncert/errors.hpp"

namespace syncert {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_nodes(int n, const char* who) {
  if (n < 2) throw std::invalid_argument(std::string(who) + ": need at least 2 nodes");
}

std::vector<GraphTopology::Edge> edges_from_laplacian(const Matrix& l) {
  std::vector<GraphTopology::Edge> edges;
  for (int i = 0; i < l.rows(); ++i)
    for (int j = i + 1; j < l.cols(); ++j)
      if (l(i, j) != 0.0) edges.emplace_back(i, j);
  return edges;
}

Matrix laplacian_from_edges(int n, const std::vector<GraphTopology::Edge>& edges) {
  Matrix l(n, n);
  for (const auto& [a, b] : edges) {
    l(a, a) += 1.0;
    l(b, b) += 1.0;
    l(a, b) -= 1.0;
    l(b, a) -= 1.0;
  }
  return l;
}

bool connected(int n, const std::vector<GraphTopology::Edge>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
  }
  return count == n;
}

Matrix kronecker_sum_laplacian(const std::vector<GraphTopology>& factors) {
  // sum_i I_post x L_i x I_pre with factor 1 varying fastest.
  int total = 1;
  for (const auto& f : factors) total *= f.nodes();
  Matrix l(total, total);
  int pre = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Matrix li = laplacian(factors[i]);
    const int ni = factors[i].nodes();
    const int post = total / (pre * ni);
    const Matrix term =
        Matrix::kron(Matrix::identity(post), Matrix::kron(li, Matrix::identity(pre)));
    l = l + term;
    pre *= ni;
  }
  return l;
}

}  // namespace

GraphTopology GraphTopology::line(int n) {
  require_nodes(n, "GraphTopology::line");
  GraphTopology g;
  g.kind_ = GraphKind::Line;
  g.nodes_ = n;
  for (int i = 0; i + 1 < n; ++i) g.edges_.emplace_back(i, i + 1);
  return g;
}

GraphTopology GraphTopology::complete(int n) {
  require_nodes(n, "GraphTopology::complete");
  GraphTopology g;
  g.kind_ = GraphKind::Complete;
  g.nodes_ = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges_.emplace_back(i, j);
  return g;
}

GraphTopology GraphTopology::star(int n) {
  require_nodes(n, "GraphTopology::star");
  GraphTopology g;
  g.kind_ = GraphKind::Star;
  g.nodes_ = n;
  for (int i = 0; i + 1 < n; ++i) g.edges_.emplace_back(i, n - 1);  // hub last
  return g;
}

GraphTopology GraphTopology::grid(int n1, int n2) {
  require_nodes(n1, "GraphTopology::grid");
  require_nodes(n2, "GraphTopology::grid");
  GraphTopology g;
  g.kind_ = GraphKind::Grid;
  g.nodes_ = n1 * n2;
  g.factors_ = {line(n1), line(n2)};
  g.edges_ = edges_from_laplacian(kronecker_sum_laplacian(g.factors_));
  return g;
}

GraphTopology GraphTopology::cartesian(std::vector<GraphTopology> factors) {
  if (factors.size() < 2)
    throw std::invalid_argument("GraphTopology::cartesian: need at least 2 factors");
  GraphTopology g;
  g.kind_ = GraphKind::Cartesian;
  g.nodes_ = 1;
  for (const auto& f : factors) g.nodes_ *= f.nodes();
  g.factors_ = std::move(factors);
  g.edges_ = edges_from_laplacian(kronecker_sum_laplacian(g.factors_));
  return g;
}

GraphTopology GraphTopology::custom(int n, std::vector<Edge> edges) {
  require_nodes(n, "GraphTopology::custom");
  std::set<Edge> canon;
  for (auto [a, b] : edges) {
    if (a == b) throw std::invalid_argument("GraphTopology::custom: self-loop");
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= n) throw std::invalid_argument("GraphTopology::custom: node out of range");
    if (!canon.insert({a, b}).second)
      throw std::invalid_argument("GraphTopology::custom: duplicate edge");
  }
  GraphTopology g;
  g.kind_ = GraphKind::Custom;
  g.nodes_ = n;
  g.edges_.assign(canon.begin(), canon.end());
  if (!connected(n, g.edges_))
    throw std::invalid_argument("GraphTopology::custom: graph must be connected");
  return g;
}

Matrix laplacian(const GraphTopology& g) {
  if (g.kind() == GraphKind::Grid || g.kind() == GraphKind::Cartesian)
    return kronecker_sum_laplacian(g.factors());
  return laplacian_from_edges(g.nodes(), g.edges());
}

Matrix incidence(const GraphTopology& g) {
  Matrix e(g.nodes(), g.edge_count());
  for (int k = 0; k < g.edge_count(); ++k) {
    e(g.edges()[k].first, k) = -1.0;
    e(g.edges()[k].second, k) = 1.0;
  }
  return e;
}

Matrix k_matrix(const GraphTopology& g, KMode mode) {
  if (mode == KMode::CompleteShortcut) {
    if (g.kind() != GraphKind::Complete)
      throw std::invalid_argument("k_matrix: CompleteShortcut is valid for complete graphs only");
    return Matrix::identity(g.edge_count()).scaled(static_cast<double>(g.nodes()));
  }
  const Matrix e = incidence(g);
  return e.transpose() * e;
}

double lambda2_closed_form(const GraphTopology& g) {
  switch (g.kind()) {
    case GraphKind::Line: {
      const double s = std::sin(kPi / (2.0 * g.nodes()));
      return 4.0 * s * s;
    }
    case GraphKind::Complete:
      return static_cast<double>(g.nodes());
    case GraphKind::Star:
      // A 2-node star is a single edge, whose lambda_2 is 2.
      return g.nodes() == 2 ? 2.0 : 1.0;
    case GraphKind::Grid:
    case GraphKind::Cartesian: {
      double m = std::numeric_limits<double>::infinity();
      for (const auto& f : g.factors()) m = std::min(m, lambda2_closed_form(f));
      return m;
    }
    case GraphKind::Custom:
      throw UnsupportedError("lambda2_closed_form: no closed form for custom graphs");
  }
  throw UnsupportedError("lambda2_closed_form: unknown kind");
}

Vec tridiagonal_spectrum(double v, double a, double b, double s, double t, int n) {
  if (n < 1) throw std::invalid_argument("tridiagonal_spectrum: n must be >= 1");
  const double st = s * t;
  if (st < 0.0) throw std::invalid_argument("tridiagonal_spectrum: st must be nonnegative");
  const double sigma = std::sqrt(st);
  const double tol = 1e-12 * std::max(1.0, sigma);
  Vec out(n);
  if (std::abs(a) <= tol && std::abs(b) <= tol) {
    for (int k = 1; k <= n; ++k) out[k - 1] = v - 2.0 * sigma * std::cos(k * kPi / (n + 1));
  } else if (std::abs(a - sigma) <= tol && std::abs(b - sigma) <= tol) {
    for (int k = 1; k <= n; ++k) out[k - 1] = v - 2.0 * sigma * std::cos(k * kPi / n);
  } else {
    throw UnsupportedError(
        "tridiagonal_spectrum: closed form needs a=b=0 or a=b=sqrt(st)");
  }
  std::sort(out.begin(), out.end());
  return out;
}

LineEdgeWeights line_edge_weights(int n, PNorm p) {
  if (n < 3)
    throw std::invalid_argument(
        "line_edge_weights: need N >= 3 (two nodes are covered by the two-compartment case)");
  LineEdgeWeights w;
  w.perron.resize(n - 1);
  w.qp.resize(n - 1);
  for (int k = 1; k < n; ++k) {
    const double pk = std::sin(k * kPi / n);
    w.perron[k - 1] = pk;
    switch (p) {
      case PNorm::One:
        w.qp[k - 1] = pk;  // exponent (2-1)/1 = 1
        break;
      case PNorm::Two:
        w.qp[k - 1] = 1.0;  // exponent 0
        break;
      case PNorm::Inf:
        w.qp[k - 1] = 1.0 / pk;
        break;
    }
  }
  return w;
}

Vec numeric_spectrum(const Matrix& s) { return symmetric_eigen(s).values; }

}  // namespace syncert
