#pragma once

#include <memory>

#include "opslash/linop.hpp"
#include "opslash/matrix.hpp"

namespace opslash {

class GenMatrix;

// One entry of a generic matrix: a scalar, a dense matrix, a linear
// operator, a nested block, or the polymorphic additive identity Zero.
// Immutable; nested blocks are shared, so copies stay cheap.
class Element {
 public:
  enum class Kind { Zero, Scalar, Mat, Op, Block };

  Element() : kind_(Kind::Zero) {}

  static Element zero() { return Element(); }
  static Element scalar(double v);
  static Element mat(Matrix m);
  static Element op(LinOp o);
  static Element block(GenMatrix b);

  Kind kind() const { return kind_; }
  double scalar_value() const;
  const Matrix& mat_value() const;
  const LinOp& op_value() const;
  const GenMatrix& block_value() const;

 private:
  Kind kind_;
  double s_ = 0.0;
  Matrix m_;
  std::shared_ptr<const LinOp> op_;
  std::shared_ptr<const GenMatrix> block_;
};

const char* kind_name(Element::Kind k);

// The multiplication table is a closed list: Scalar commutes with
// everything, Mat*Mat multiplies, Op*Mat applies, Op*Op composes,
// Block*Block is the block product, Block*{Mat,Scalar} treats the right
// factor as a 1x1 block, Zero absorbs. Every other pairing throws
// DomainError naming both variants. Scaling an operator is representable
// only by +-1 (identity or Negate).
Element elem_mul(const Element& a, const Element& b);

// Componentwise sum; Zero is the identity. Operator sums have no
// representation in the closed operator set and throw DomainError.
Element elem_add(const Element& a, const Element& b);

Element elem_neg(const Element& e);

// Scalars unchanged, matrices transposed, operators adjointed (propagating
// the TransposeDot error), blocks recursed.
Element elem_transpose(const Element& e);

bool elem_equal(const Element& a, const Element& b);

// Structural predicates used by the triangular solver.
bool is_structural_zero(const Element& e);
bool is_identity_element(const Element& e);

}  // namespace opslash
