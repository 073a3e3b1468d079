#pragma once

#include <initializer_list>
#include <vector>

namespace syncert {

using Vec = std::vector<double>;

// Dense row-major matrix of doubles. Everything in this toolkit is small
// (n up to a few hundred), so there is no sparse storage.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> init);

  static Matrix identity(int n);
  static Matrix diagonal(const Vec& d);
  static Matrix kron(const Matrix& a, const Matrix& b);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_ && rows_ > 0; }

  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(double s) const;
  Vec apply(const Vec& x) const;  // A*x

  double max_abs() const;
  bool all_finite() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  Vec data_;
};

Matrix block_diagonal(const std::vector<Matrix>& blocks);
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace syncert
