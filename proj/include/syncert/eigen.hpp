#pragma once

#include "syncert/matrix.hpp"

namespace syncert {

struct SymmetricEigen {
  Vec values;      // ascending
  Matrix vectors;  // orthonormal, column i pairs with values[i]
};

// Cyclic Jacobi eigensolver for symmetric matrices. Sweeps until the
// off-diagonal Frobenius norm drops below 1e-12, a sweep applies no
// rotation, or 100 sweeps have run. Throws std::invalid_argument if the
// input is not symmetric within asym_tol.
SymmetricEigen symmetric_eigen(const Matrix& s, double asym_tol = 1e-12);

}  // namespace syncert
