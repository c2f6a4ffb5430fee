#pragma once

#include <initializer_list>
#include <vector>

#include "opslash/rng.hpp"

namespace opslash {

struct Shape {
  int rows = 0;
  int cols = 0;
  friend bool operator==(const Shape&, const Shape&) = default;
};

// Dense real matrix, column-major. vec(X) stacks columns top to bottom,
// left to right, which is exactly the storage order.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);
  // Row-major nested initializer for literals: Matrix{{1,2},{3,4}}.
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(int n);
  static Matrix zeros(int rows, int cols) { return Matrix(rows, cols); }
  // Entries drawn i.i.d. from scale * uniform(-1,1), column-major draw order.
  static Matrix random(int rows, int cols, SplitMix64& rng, double scale = 1.0);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Shape shape() const { return {rows_, cols_}; }
  int size() const { return rows_ * cols_; }

  double& operator()(int i, int j) { return data_[i + static_cast<std::size_t>(j) * rows_]; }
  double operator()(int i, int j) const { return data_[i + static_cast<std::size_t>(j) * rows_]; }

  const double* data() const { return data_.data(); }
  double* data() { return data_.data(); }
  const std::vector<double>& storage() const { return data_; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix scaled(double a) const;
  Matrix hadamard(const Matrix& rhs) const;
  Matrix kron(const Matrix& rhs) const;  // this (x) rhs

  // Column vector mn x 1 of the stacked columns.
  Matrix vec() const;
  static Matrix unvec(const Matrix& v, int rows, int cols);

  // trace(this^T rhs) = sum of elementwise products.
  double dot(const Matrix& rhs) const;
  double frobenius_norm() const;
  double max_abs() const;

  bool same_shape(const Matrix& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// Largest entrywise deviation between two same-shaped matrices.
double max_abs_diff(const Matrix& a, const Matrix& b);

// Largest entrywise relative error, |a-b| / max(|a|,|b|), with deviations
// below abs_floor ignored so that zero-vs-zero entries compare clean.
double max_rel_err(const Matrix& a, const Matrix& b, double abs_floor = 1e-14);

}  // namespace opslash
