#include <doctest.h>

#include <cmath>

#include "syncert/eigen.hpp"
#include "syncert/errors.hpp"
#include "syncert/graphs.hpp"
#include "test_util.hpp"

using namespace syncert;

namespace {

constexpr double kPi = 3.14159265358979323846;

double laplacian_identity_residual(const GraphTopology& g) {
  const Matrix e = incidence(g);
  return max_abs_diff(e * e.transpose(), laplacian(g));
}

double k_identity_residual(const GraphTopology& g, KMode mode) {
  const Matrix e = incidence(g);
  const Matrix et = e.transpose();
  return max_abs_diff(et * laplacian(g), k_matrix(g, mode) * et);
}

std::vector<GraphTopology> assorted_graphs() {
  return {GraphTopology::line(7),
          GraphTopology::complete(5),
          GraphTopology::star(6),
          GraphTopology::grid(3, 4),
          GraphTopology::cartesian({GraphTopology::line(3), GraphTopology::complete(3)}),
          GraphTopology::custom(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 3}})};
}

}  // namespace

TEST_SUITE_BEGIN("graphs");

TEST_CASE("line and complete Laplacians match the displayed patterns") {
  const Matrix l3 = laplacian(GraphTopology::line(3));
  const Matrix expected_line = {{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}};
  CHECK(max_abs_diff(l3, expected_line) == 0.0);

  const Matrix c3 = laplacian(GraphTopology::complete(3));
  const Matrix expected_complete = {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
  CHECK(max_abs_diff(c3, expected_complete) == 0.0);
}

TEST_CASE("2x2 grid equals the 4-cycle") {
  const Matrix grid = laplacian(GraphTopology::grid(2, 2));
  const Matrix cycle =
      laplacian(GraphTopology::custom(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  CHECK(max_abs_diff(grid, cycle) == 0.0);
  for (int i = 0; i < 4; ++i) {
    CHECK(grid(i, i) == 2.0);
    double row = 0.0;
    for (int j = 0; j < 4; ++j) row += grid(i, j);
    CHECK(row == 0.0);
  }
}

TEST_CASE("incidence columns under the canonical orientation") {
  const Matrix e_line = incidence(GraphTopology::line(3));
  const Matrix expected_line = {{-1, 0}, {1, -1}, {0, 1}};
  CHECK(max_abs_diff(e_line, expected_line) == 0.0);

  const Matrix e_star = incidence(GraphTopology::star(3));
  const Matrix expected_star = {{-1, 0}, {0, -1}, {1, 1}};
  CHECK(max_abs_diff(e_star, expected_star) == 0.0);

  CHECK(laplacian_identity_residual(GraphTopology::complete(3)) == 0.0);
}

TEST_CASE("Laplacian invariants across kinds and sizes") {
  std::vector<GraphTopology> graphs;
  for (int n = 2; n <= 50; n += 7) {
    graphs.push_back(GraphTopology::line(n));
    graphs.push_back(GraphTopology::complete(n));
    graphs.push_back(GraphTopology::star(n));
  }
  graphs.push_back(GraphTopology::grid(5, 7));
  for (const auto& g : assorted_graphs()) graphs.push_back(g);

  for (const auto& g : graphs) {
    const Matrix l = laplacian(g);
    for (int i = 0; i < l.rows(); ++i) {
      double row = 0.0;
      for (int j = 0; j < l.cols(); ++j) row += l(i, j);
      CHECK(row == 0.0);
    }
    CHECK(numeric_spectrum(l).front() >= -1e-10);
    CHECK(laplacian_identity_residual(g) == 0.0);
  }
}

TEST_CASE("custom graph validation") {
  CHECK_THROWS_AS(GraphTopology::custom(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(GraphTopology::custom(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(GraphTopology::custom(4, {{0, 1}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(GraphTopology::custom(3, {{0, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(GraphTopology::line(1), std::invalid_argument);
}

TEST_CASE("k_matrix modes satisfy the transfer identity") {
  const Matrix k_line = k_matrix(GraphTopology::line(3), KMode::EdgeLaplacian);
  const Matrix expected = {{2, -1}, {-1, 2}};
  CHECK(max_abs_diff(k_line, expected) == 0.0);

  const Matrix k_complete = k_matrix(GraphTopology::complete(3), KMode::CompleteShortcut);
  CHECK(max_abs_diff(k_complete, Matrix::identity(3).scaled(3.0)) == 0.0);

  for (const auto& g : assorted_graphs()) {
    CHECK(k_identity_residual(g, KMode::EdgeLaplacian) == 0.0);
    if (g.kind() == GraphKind::Complete)
      CHECK(k_identity_residual(g, KMode::CompleteShortcut) == 0.0);
  }
  CHECK_THROWS_AS(k_matrix(GraphTopology::line(4), KMode::CompleteShortcut),
                  std::invalid_argument);
}

TEST_CASE("lambda2 closed forms") {
  CHECK(lambda2_closed_form(GraphTopology::line(3)) == doctest::Approx(1.0));
  CHECK(lambda2_closed_form(GraphTopology::complete(5)) == doctest::Approx(5.0));
  CHECK(lambda2_closed_form(GraphTopology::grid(3, 4)) == doctest::Approx(0.585786).epsilon(1e-5));
  // Numeric cross-check of the grid value on the assembled 12x12 Laplacian.
  const Vec spec = numeric_spectrum(laplacian(GraphTopology::grid(3, 4)));
  CHECK(lambda2_closed_form(GraphTopology::grid(3, 4)) == doctest::Approx(spec[1]).epsilon(1e-9));
  CHECK_THROWS_AS(lambda2_closed_form(GraphTopology::custom(3, {{0, 1}, {1, 2}})),
                  UnsupportedError);
}

TEST_CASE("lambda2 closed form vs numeric spectrum across families") {
  for (int n = 2; n <= 50; ++n) {
    for (auto make : {&GraphTopology::line, &GraphTopology::complete, &GraphTopology::star}) {
      const GraphTopology g = make(n);
      const Vec spec = numeric_spectrum(laplacian(g));
      CHECK(std::abs(lambda2_closed_form(g) - spec[1]) <= 1e-8);
    }
  }
  for (int a = 2; a <= 10; a += 2)
    for (int b = 2; b <= 10; b += 3) {
      const GraphTopology g = GraphTopology::grid(a, b);
      const Vec spec = numeric_spectrum(laplacian(g));
      CHECK(std::abs(lambda2_closed_form(g) - spec[1]) <= 1e-8);
    }
}

TEST_CASE("tridiagonal spectrum closed forms") {
  const Vec case1 = tridiagonal_spectrum(2.0, 0.0, 0.0, -1.0, -1.0, 2);
  REQUIRE(case1.size() == 2);
  CHECK(case1[0] == doctest::Approx(1.0));
  CHECK(case1[1] == doctest::Approx(3.0));

  const Vec case2 = tridiagonal_spectrum(-2.0, 1.0, 1.0, 1.0, 1.0, 3);
  REQUIRE(case2.size() == 3);
  CHECK(case2[0] == doctest::Approx(-3.0));
  CHECK(case2[1] == doctest::Approx(-1.0));
  CHECK(case2[2] == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS(tridiagonal_spectrum(0.0, 0.0, 0.0, 1.0, -1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(tridiagonal_spectrum(0.0, 2.0, 0.0, 1.0, 1.0, 3), UnsupportedError);
}

TEST_CASE("tridiagonal closed forms vs numeric, symmetric and similarity-reduced") {
  // Case 1, n = 9, the matrix [[2,-1],...] pattern.
  {
    const int n = 9;
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
      m(i, i) = 2.0;
      if (i > 0) m(i, i - 1) = -1.0;
      if (i + 1 < n) m(i, i + 1) = -1.0;
    }
    const Vec closed = tridiagonal_spectrum(2.0, 0.0, 0.0, -1.0, -1.0, n);
    const Vec numeric = numeric_spectrum(m);
    for (int i = 0; i < n; ++i) CHECK(std::abs(closed[i] - numeric[i]) <= 1e-10);
  }

  auto gen = testutil::rng(808);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  std::uniform_real_distribution<double> pos(0.2, 3.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 29);
    const double v = dist(gen);
    double s = pos(gen), t = pos(gen);
    if (gen() % 2) {
      s = -s;
      t = -t;
    }
    const double sigma = std::sqrt(s * t);
    const bool case2 = gen() % 2;
    const double ab = case2 ? sigma : 0.0;

    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
      m(i, i) = v;
      if (i > 0) m(i, i - 1) = s;
      if (i + 1 < n) m(i, i + 1) = t;
    }
    m(0, 0) += ab;
    m(n - 1, n - 1) += ab;

    // Symmetrize by the diagonal similarity that balances s and t.
    Matrix sym = m;
    if (s != t) {
      for (int i = 0; i < n; ++i) {
        if (i > 0) sym(i, i - 1) = sigma * (s < 0 ? -1.0 : 1.0);
        if (i + 1 < n) sym(i, i + 1) = sigma * (t < 0 ? -1.0 : 1.0);
      }
    }
    const Vec closed = tridiagonal_spectrum(v, ab, ab, s, t, n);
    const Vec numeric = numeric_spectrum(sym);
    REQUIRE(closed.size() == numeric.size());
    for (std::size_t i = 0; i < closed.size(); ++i)
      CHECK(std::abs(closed[i] - numeric[i]) <= 1e-9);
  }
}

TEST_CASE("line edge weights are the Perron pair of the edge Laplacian") {
  const LineEdgeWeights w4 = line_edge_weights(4, PNorm::One);
  REQUIRE(w4.perron.size() == 3);
  CHECK(w4.perron[0] == doctest::Approx(std::sin(kPi / 4)));
  CHECK(w4.perron[1] == doctest::Approx(1.0));
  CHECK(w4.perron[2] == doctest::Approx(std::sin(3 * kPi / 4)));

  for (int n = 3; n <= 20; ++n) {
    const LineEdgeWeights w = line_edge_weights(n, PNorm::One);
    const Matrix k = k_matrix(GraphTopology::line(n), KMode::EdgeLaplacian);
    const Vec kp = k.apply(w.perron);
    const double gamma = 4.0 * std::sin(kPi / (2 * n)) * std::sin(kPi / (2 * n));
    for (int i = 0; i < n - 1; ++i) {
      CHECK(std::abs(kp[i] - gamma * w.perron[i]) <= 1e-10);
      CHECK(w.perron[i] > 0.0);
    }
  }

  const LineEdgeWeights w2 = line_edge_weights(6, PNorm::Two);
  for (double q : w2.qp) CHECK(q == 1.0);
  const LineEdgeWeights winf = line_edge_weights(6, PNorm::Inf);
  for (std::size_t i = 0; i < winf.qp.size(); ++i)
    CHECK(winf.qp[i] == doctest::Approx(1.0 / winf.perron[i]));

  CHECK_THROWS_AS(line_edge_weights(2, PNorm::One), std::invalid_argument);
}

TEST_CASE("numeric spectrum basics") {
  const Vec s = numeric_spectrum({{2.0, 1.0}, {1.0, 2.0}});
  CHECK(s[0] == doctest::Approx(1.0));
  CHECK(s[1] == doctest::Approx(3.0));

  const Vec c4 = numeric_spectrum(laplacian(GraphTopology::complete(4)));
  CHECK(c4[0] == doctest::Approx(0.0).epsilon(1e-12));
  for (int i = 1; i < 4; ++i) CHECK(c4[i] == doctest::Approx(4.0));

  const GraphTopology line10 = GraphTopology::line(10);
  CHECK(std::abs(numeric_spectrum(laplacian(line10))[1] - lambda2_closed_form(line10)) <= 1e-9);

  CHECK_THROWS_AS(numeric_spectrum({{0.0, 1.0}, {2.0, 0.0}}), std::invalid_argument);
}

TEST_CASE("eigendecomposition reconstructs the matrix") {
  auto gen = testutil::rng(909);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 7);
    Matrix a = testutil::random_matrix(gen, n);
    Matrix sym(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sym(i, j) = 0.5 * (a(i, j) + a(j, i));
    const SymmetricEigen eig = symmetric_eigen(sym);
    const Matrix reconstructed =
        eig.vectors * Matrix::diagonal(eig.values) * eig.vectors.transpose();
    CHECK(max_abs_diff(sym, reconstructed) <= 1e-9);
  }
}

TEST_CASE("tree edge Laplacian spectrum equals the nonzero Laplacian spectrum") {
  for (int n = 3; n <= 20; n += 4) {
    for (auto make : {&GraphTopology::line, &GraphTopology::star}) {
      const GraphTopology g = make(n);
      REQUIRE(g.is_tree());
      const Vec node_spec = numeric_spectrum(laplacian(g));
      const Vec edge_spec = numeric_spectrum(k_matrix(g, KMode::EdgeLaplacian));
      REQUIRE(edge_spec.size() == node_spec.size() - 1);
      CHECK(edge_spec.front() > 1e-10);  // trees have nonsingular edge Laplacians
      for (std::size_t i = 0; i < edge_spec.size(); ++i)
        CHECK(std::abs(edge_spec[i] - node_spec[i + 1]) <= 1e-9);
    }
  }
}

TEST_SUITE_END();
