#include "opslash/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "opslash/error.hpp"
#include "opslash/kernels.hpp"

namespace opslash {

namespace {
std::string shape_str(int r, int c) { return std::to_string(r) + "x" + std::to_string(c); }
}  // namespace

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {
  if (rows < 0 || cols < 0) throw ShapeError("Matrix: negative dimensions " + shape_str(rows, cols));
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  data_.assign(static_cast<std::size_t>(rows_) * cols_, 0.0);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_)
      throw ShapeError("Matrix literal: ragged row " + std::to_string(i));
    int j = 0;
    for (double v : row) (*this)(i, j++) = v;
    ++i;
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::random(int rows, int cols, SplitMix64& rng, double scale) {
  Matrix m(rows, cols);
  for (double& v : m.data_) v = scale * rng.next_symmetric();
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int j = 0; j < cols_; ++j)
    for (int i = 0; i < rows_; ++i) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw ShapeError("matmul: " + shape_str(rows_, cols_) + " * " + shape_str(rhs.rows_, rhs.cols_));
  Matrix c(rows_, rhs.cols_);
  kernels::matmul(data(), rhs.data(), c.data(), rows_, cols_, rhs.cols_);
  return c;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (!same_shape(rhs))
    throw ShapeError("add: " + shape_str(rows_, cols_) + " + " + shape_str(rhs.rows_, rhs.cols_));
  Matrix c = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) c.data_[i] += rhs.data_[i];
  return c;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (!same_shape(rhs))
    throw ShapeError("sub: " + shape_str(rows_, cols_) + " - " + shape_str(rhs.rows_, rhs.cols_));
  Matrix c = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) c.data_[i] -= rhs.data_[i];
  return c;
}

Matrix Matrix::operator-() const { return scaled(-1.0); }

Matrix Matrix::scaled(double a) const {
  Matrix c = *this;
  for (double& v : c.data_) v *= a;
  return c;
}

Matrix Matrix::hadamard(const Matrix& rhs) const {
  if (!same_shape(rhs))
    throw ShapeError("hadamard: " + shape_str(rows_, cols_) + " .* " + shape_str(rhs.rows_, rhs.cols_));
  Matrix c(rows_, cols_);
  kernels::hadamard(data(), rhs.data(), c.data(), data_.size());
  return c;
}

Matrix Matrix::kron(const Matrix& rhs) const {
  Matrix k(rows_ * rhs.rows_, cols_ * rhs.cols_);
  kernels::kron(data(), rows_, cols_, rhs.data(), rhs.rows_, rhs.cols_, k.data());
  return k;
}

Matrix Matrix::vec() const {
  Matrix v(rows_ * cols_, 1);
  v.data_ = data_;
  return v;
}

Matrix Matrix::unvec(const Matrix& v, int rows, int cols) {
  if (v.cols() != 1 || v.rows() != rows * cols)
    throw ShapeError("unvec: need " + std::to_string(rows * cols) + "x1, got " +
                     shape_str(v.rows(), v.cols()));
  Matrix m(rows, cols);
  m.data_ = v.data_;
  return m;
}

double Matrix::dot(const Matrix& rhs) const {
  if (!same_shape(rhs))
    throw ShapeError("dot: " + shape_str(rows_, cols_) + " vs " + shape_str(rhs.rows_, rhs.cols_));
  double acc = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) acc += data_[i] * rhs.data_[i];
  return acc;
}

double Matrix::frobenius_norm() const { return std::sqrt(dot(*this)); }

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b))
    throw ShapeError("max_abs_diff: " + shape_str(a.rows(), a.cols()) + " vs " + shape_str(b.rows(), b.cols()));
  double m = 0.0;
  for (int j = 0; j < a.cols(); ++j)
    for (int i = 0; i < a.rows(); ++i) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

double max_rel_err(const Matrix& a, const Matrix& b, double abs_floor) {
  if (!a.same_shape(b))
    throw ShapeError("max_rel_err: " + shape_str(a.rows(), a.cols()) + " vs " + shape_str(b.rows(), b.cols()));
  double worst = 0.0;
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) {
      const double diff = std::abs(a(i, j) - b(i, j));
      if (diff <= abs_floor) continue;
      const double denom = std::max(std::abs(a(i, j)), std::abs(b(i, j)));
      worst = std::max(worst, denom > 0.0 ? diff / denom : diff);
    }
  }
  return worst;
}

}  // namespace opslash
