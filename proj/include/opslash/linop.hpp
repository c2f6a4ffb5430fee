#pragma once

#include <memory>
#include <optional>
#include <string>

#include "opslash/matrix.hpp"

namespace opslash {

// A linear operator on matrices. Values are immutable; composition and
// negation hold their children behind shared pointers, so copies are cheap
// and safe to share across threads.
//
// Identity and Zero are shape-polymorphic: they act at whatever size the
// context provides. dense() on them therefore needs an explicit input shape.
class LinOp {
 public:
  enum class Kind { Identity, Zero, LeftMult, RightMult, Hadamard, Kron, TransposeDot, Compose, Negate };

  static LinOp identity() { return LinOp(Kind::Identity); }
  static LinOp zero() { return LinOp(Kind::Zero); }
  static LinOp left_mult(Matrix b);   // X -> B X
  static LinOp right_mult(Matrix a);  // X -> X A
  static LinOp hadamard(Matrix m);    // X -> M .* X
  static LinOp kron(Matrix a, Matrix b);  // X -> B X A^T
  static LinOp transpose_dot(Matrix g);   // X -> trace(G^T X), as a 1x1 matrix

  Kind kind() const { return kind_; }
  const Matrix& payload_a() const { return a_; }
  const Matrix& payload_b() const { return b_; }
  const LinOp& outer() const { return *outer_; }
  const LinOp& inner() const { return *inner_; }

 private:
  explicit LinOp(Kind k) : kind_(k) {}
  friend LinOp compose(LinOp outer, LinOp inner);
  friend LinOp negate(LinOp op);

  Kind kind_;
  Matrix a_, b_;
  std::shared_ptr<const LinOp> outer_, inner_;
};

const char* kind_name(LinOp::Kind k);

// Partially known operand shape used while chaining operators whose free
// dimension is fixed only by context.
struct PartialShape {
  std::optional<int> rows, cols;
};

Matrix apply(const LinOp& op, const Matrix& x);

// Adjoint w.r.t. <X,Y> = trace(X^T Y). TransposeDot has no adjoint here
// (it would map scalars to matrices) and throws DomainError.
LinOp adjoint(const LinOp& op);

// apply(compose(p,q), X) == apply(p, apply(q, X)). Shape chaining is
// validated as far as the operands determine it.
LinOp compose(LinOp outer, LinOp inner);
LinOp negate(LinOp op);

// Output shape for a (possibly partial) input shape; throws ShapeError on
// any contradiction, naming the variant and both shapes.
PartialShape forward_shape(const LinOp& op, PartialShape in);

// Fully determined input shape, when the operator's payloads pin it down.
std::optional<Shape> fixed_input(const LinOp& op);

// Dense representation D with vec(apply(op, X)) == D * vec(X) for every X
// of the given input shape.
Matrix dense(const LinOp& op, Shape in);
// Same, using the operator's own fixed input shape; throws ShapeError for
// unresolved polymorphic shapes (Identity, Zero, bare Left/RightMult).
Matrix dense(const LinOp& op);

// Verifies the push-through identity (L^T G)^{T.} == G^{T.} L on a probe X:
// both sides evaluated numerically and compared to `tol` relative.
bool tdot_pushthrough_check(const LinOp& l, const Matrix& g, const Matrix& x, double tol = 1e-10);

// Deep structural comparison (same tree, same payload entries).
bool structurally_equal(const LinOp& a, const LinOp& b);

}  // namespace opslash
