#pragma once

#include <vector>

#include "opslash/element.hpp"

namespace opslash {

// 2-D array of Elements. All entries default to Zero.
class GenMatrix {
 public:
  GenMatrix() = default;
  GenMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Element& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Element& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Element> entries_;
};

GenMatrix gmatmul(const GenMatrix& a, const GenMatrix& b);

// Recursive transpose: entry (i,j) of the result is the element transpose
// of entry (j,i), all the way down through blocks and operators.
GenMatrix gtranspose(const GenMatrix& a);

// Solves A x = b where A is structurally unit-lower-triangular (forward
// substitution) or unit-upper-triangular (back substitution): diagonal
// entries must be identity elements, the opposite triangle structurally
// Zero. Off-diagonal entries are used as stored, i.e. a system I - L keeps
// its negated entries and the solver subtracts their products.
GenMatrix backslash(const GenMatrix& a, const GenMatrix& b);

// Unit diagonal of Scalar(1) or of the identity operator.
GenMatrix gen_identity(int n, bool operator_diag = false);

// Scalar GenMatrix from a dense matrix; exact zeros become structural Zero.
GenMatrix gen_from_dense(const Matrix& m);

// Dense matrix from a Scalar/Zero GenMatrix; throws on other entry kinds.
Matrix dense_from_gen(const GenMatrix& g);

bool gen_equal(const GenMatrix& a, const GenMatrix& b);

}  // namespace opslash
