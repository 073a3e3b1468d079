#include "syncert/measures.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "syncert/eigen.hpp"

namespace syncert {

namespace {

void require_square_match(const Matrix& a, const NormSpec& spec, const char* who) {
  if (!a.square()) throw std::invalid_argument(std::string(who) + ": matrix must be square");
  if (a.rows() != spec.dim())
    throw std::invalid_argument(std::string(who) + ": matrix/norm dimension mismatch");
  if (!a.all_finite()) throw std::invalid_argument(std::string(who) + ": non-finite entry");
}

// A' = Q A Q^-1 for diagonal Q.
Matrix conjugate_by_weights(const Matrix& a, const Vec& w) {
  Matrix b = a;
  const int n = a.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = a(i, j) * (w[i] / w[j]);
  return b;
}

Matrix symmetric_part(const Matrix& a) {
  Matrix s = a;
  const int n = a.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s(i, j) = 0.5 * (a(i, j) + a(j, i));
  return s;
}

double largest_eigenvalue_symmetric(const Matrix& s) {
  return symmetric_eigen(s, 1e-9 * (1.0 + s.max_abs())).values.back();
}

}  // namespace

NormSpec::NormSpec(PNorm p, Vec w) : p(p), weights(std::move(w)) {
  if (weights.empty()) throw std::invalid_argument("NormSpec: empty weight vector");
  for (double q : weights)
    if (!(q > 0.0) || !std::isfinite(q))
      throw std::invalid_argument("NormSpec: weights must be positive and finite");
}

NormSpec NormSpec::unweighted(PNorm p, int n) { return NormSpec(p, Vec(n, 1.0)); }

double vector_norm(const Vec& x, const NormSpec& spec) {
  if (static_cast<int>(x.size()) != spec.dim())
    throw std::invalid_argument("vector_norm: dimension mismatch");
  switch (spec.p) {
    case PNorm::One: {
      double s = 0.0;
      for (int i = 0; i < spec.dim(); ++i) s += std::abs(spec.weights[i] * x[i]);
      return s;
    }
    case PNorm::Two: {
      double s = 0.0;
      for (int i = 0; i < spec.dim(); ++i) {
        const double v = spec.weights[i] * x[i];
        s += v * v;
      }
      return std::sqrt(s);
    }
    case PNorm::Inf: {
      double m = 0.0;
      for (int i = 0; i < spec.dim(); ++i) m = std::max(m, std::abs(spec.weights[i] * x[i]));
      return m;
    }
  }
  return 0.0;
}

double induced_matrix_norm(const Matrix& a, const NormSpec& spec) {
  require_square_match(a, spec, "induced_matrix_norm");
  const Matrix b = conjugate_by_weights(a, spec.weights);
  const int n = b.rows();
  switch (spec.p) {
    case PNorm::One: {
      double m = 0.0;
      for (int j = 0; j < n; ++j) {
        double col = 0.0;
        for (int i = 0; i < n; ++i) col += std::abs(b(i, j));
        m = std::max(m, col);
      }
      return m;
    }
    case PNorm::Inf: {
      double m = 0.0;
      for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += std::abs(b(i, j));
        m = std::max(m, row);
      }
      return m;
    }
    case PNorm::Two: {
      // Symmetrize the Gram matrix; the product has roundoff-level asymmetry.
      const Matrix gram = symmetric_part(b.transpose() * b);
      const double lmax = largest_eigenvalue_symmetric(gram);
      return std::sqrt(std::max(0.0, lmax));
    }
  }
  return 0.0;
}

double matrix_measure(const Matrix& a, const NormSpec& spec) {
  require_square_match(a, spec, "matrix_measure");
  const Matrix b = conjugate_by_weights(a, spec.weights);
  const int n = b.rows();
  switch (spec.p) {
    case PNorm::One: {
      double m = -std::numeric_limits<double>::infinity();
      for (int j = 0; j < n; ++j) {
        double col = b(j, j);
        for (int i = 0; i < n; ++i)
          if (i != j) col += std::abs(b(i, j));
        m = std::max(m, col);
      }
      return m;
    }
    case PNorm::Inf: {
      double m = -std::numeric_limits<double>::infinity();
      for (int i = 0; i < n; ++i) {
        double row = b(i, i);
        for (int j = 0; j < n; ++j)
          if (j != i) row += std::abs(b(i, j));
        m = std::max(m, row);
      }
      return m;
    }
    case PNorm::Two:
      return largest_eigenvalue_symmetric(symmetric_part(b));
  }
  return 0.0;
}

double matrix_measure_definitional(const Matrix& a, const NormSpec& spec, double h) {
  if (!(h > 0.0) || h > 1e-3)
    throw std::invalid_argument("matrix_measure_definitional: h must be in (0, 1e-3]");
  require_square_match(a, spec, "matrix_measure_definitional");
  Matrix m = a.scaled(h);
  for (int i = 0; i < m.rows(); ++i) m(i, i) += 1.0;
  return (induced_matrix_norm(m, spec) - 1.0) / h;
}

double semi_inner_plus(const Vec& x, const Vec& y, const NormSpec& spec, double h) {
  if (x.size() != y.size()) throw std::invalid_argument("semi_inner_plus: length mismatch");
  if (!(h > 0.0)) throw std::invalid_argument("semi_inner_plus: h must be positive");
  const double nx = vector_norm(x, spec);
  if (nx == 0.0)
    throw std::invalid_argument("semi_inner_plus: undefined at x = 0");
  Vec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + h * y[i];
  return nx * (vector_norm(z, spec) - nx) / h;
}

}  // namespace syncert
