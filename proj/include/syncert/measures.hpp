#pragma once

#include "syncert/matrix.hpp"

namespace syncert {

enum class PNorm { One, Two, Inf };

// Weighted L^p structure on R^n: ||x||_{p,Q} = ||Qx||_p with Q = diag(weights).
// Only p in {1, 2, inf} is supported; those are the exponents with closed-form
// induced measures, and they are the only ones used anywhere downstream.
struct NormSpec {
  PNorm p;
  Vec weights;

  NormSpec(PNorm p, Vec weights);  // validates: n >= 1, weights finite and > 0
  static NormSpec unweighted(PNorm p, int n);
  int dim() const { return static_cast<int>(weights.size()); }
};

// ||Qx||_p
double vector_norm(const Vec& x, const NormSpec& spec);

// Induced operator norm ||Q A Q^-1||_p. p=1: max column abs sum; p=inf: max
// row abs sum; p=2: largest singular value via the symmetric eigensolver on
// B^T B.
double induced_matrix_norm(const Matrix& a, const NormSpec& spec);

// Matrix measure (logarithmic norm) M_{p,Q}[A] = M_p[Q A Q^-1].
//   p=1:   max_j ( a'_jj + sum_{i!=j} |a'_ij| )
//   p=2:   largest eigenvalue of (A' + A'^T)/2
//   p=inf: max_i ( a'_ii + sum_{j!=i} |a'_ij| )
double matrix_measure(const Matrix& a, const NormSpec& spec);

// Definitional one-sided difference quotient (||I + hA|| - 1)/h. Serves as
// the independent oracle for matrix_measure; agreement is O(h ||A||^2).
// Requires 0 < h <= 1e-3.
double matrix_measure_definitional(const Matrix& a, const NormSpec& spec, double h);

// Forward-difference approximation of the right semi inner product:
// ||x|| * (||x + h y|| - ||x||)/h. Undefined at x = 0.
double semi_inner_plus(const Vec& x, const Vec& y, const NormSpec& spec, double h);

}  // namespace syncert
