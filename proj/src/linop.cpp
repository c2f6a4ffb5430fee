#include "opslash/linop.hpp"

#include <cmath>
#include <utility>

#include "opslash/error.hpp"

namespace opslash {

namespace {

std::string shape_str(int r, int c) { return std::to_string(r) + "x" + std::to_string(c); }
std::string shape_str(Shape s) { return shape_str(s.rows, s.cols); }

std::string partial_str(PartialShape s) {
  auto dim = [](std::optional<int> d) { return d ? std::to_string(*d) : std::string("?"); };
  return dim(s.rows) + "x" + dim(s.cols);
}

void unify_dim(std::optional<int>& have, int want, const LinOp& op, PartialShape in) {
  if (have && *have != want)
    throw ShapeError(std::string(kind_name(op.kind())) + ": operand shape " + partial_str(in) +
                     " incompatible with operator shape (expected dim " + std::to_string(want) + ")");
  have = want;
}

Matrix diag_of_vec(const Matrix& m) {
  Matrix v = m.vec();
  Matrix d(v.rows(), v.rows());
  for (int i = 0; i < v.rows(); ++i) d(i, i) = v(i, 0);
  return d;
}

}  // namespace

const char* kind_name(LinOp::Kind k) {
  switch (k) {
    case LinOp::Kind::Identity: return "Identity";
    case LinOp::Kind::Zero: return "ZeroOp";
    case LinOp::Kind::LeftMult: return "LeftMult";
    case LinOp::Kind::RightMult: return "RightMult";
    case LinOp::Kind::Hadamard: return "Hadamard";
    case LinOp::Kind::Kron: return "Kron";
    case LinOp::Kind::TransposeDot: return "TransposeDot";
    case LinOp::Kind::Compose: return "Compose";
    case LinOp::Kind::Negate: return "Negate";
  }
  return "?";
}

LinOp LinOp::left_mult(Matrix b) {
  LinOp op(Kind::LeftMult);
  op.b_ = std::move(b);
  return op;
}

LinOp LinOp::right_mult(Matrix a) {
  LinOp op(Kind::RightMult);
  op.a_ = std::move(a);
  return op;
}

LinOp LinOp::hadamard(Matrix m) {
  LinOp op(Kind::Hadamard);
  op.a_ = std::move(m);
  return op;
}

LinOp LinOp::kron(Matrix a, Matrix b) {
  LinOp op(Kind::Kron);
  op.a_ = std::move(a);
  op.b_ = std::move(b);
  return op;
}

LinOp LinOp::transpose_dot(Matrix g) {
  LinOp op(Kind::TransposeDot);
  op.a_ = std::move(g);
  return op;
}

LinOp compose(LinOp outer, LinOp inner) {
  LinOp op(LinOp::Kind::Compose);
  op.outer_ = std::make_shared<const LinOp>(std::move(outer));
  op.inner_ = std::make_shared<const LinOp>(std::move(inner));
  forward_shape(op, {std::nullopt, std::nullopt});  // reject impossible chains early
  return op;
}

LinOp negate(LinOp op) {
  LinOp n(LinOp::Kind::Negate);
  n.inner_ = std::make_shared<const LinOp>(std::move(op));
  return n;
}

PartialShape forward_shape(const LinOp& op, PartialShape in) {
  switch (op.kind()) {
    case LinOp::Kind::Identity:
    case LinOp::Kind::Zero:
      return in;
    case LinOp::Kind::LeftMult:
      unify_dim(in.rows, op.payload_b().cols(), op, in);
      return {op.payload_b().rows(), in.cols};
    case LinOp::Kind::RightMult:
      unify_dim(in.cols, op.payload_a().rows(), op, in);
      return {in.rows, op.payload_a().cols()};
    case LinOp::Kind::Hadamard:
      unify_dim(in.rows, op.payload_a().rows(), op, in);
      unify_dim(in.cols, op.payload_a().cols(), op, in);
      return {op.payload_a().rows(), op.payload_a().cols()};
    case LinOp::Kind::Kron:
      unify_dim(in.rows, op.payload_b().cols(), op, in);
      unify_dim(in.cols, op.payload_a().cols(), op, in);
      return {op.payload_b().rows(), op.payload_a().rows()};
    case LinOp::Kind::TransposeDot:
      unify_dim(in.rows, op.payload_a().rows(), op, in);
      unify_dim(in.cols, op.payload_a().cols(), op, in);
      return {1, 1};
    case LinOp::Kind::Negate:
      return forward_shape(op.inner(), in);
    case LinOp::Kind::Compose:
      return forward_shape(op.outer(), forward_shape(op.inner(), in));
  }
  throw DomainError("forward_shape: unknown operator kind");
}

namespace {

// Concrete input shape reconstructed from a concrete output shape.
Shape input_from_output(const LinOp& op, Shape out) {
  switch (op.kind()) {
    case LinOp::Kind::Identity:
    case LinOp::Kind::Zero:
      return out;
    case LinOp::Kind::LeftMult:
      if (out.rows != op.payload_b().rows())
        throw ShapeError("LeftMult: output " + shape_str(out) + " does not match B " +
                         shape_str(op.payload_b().rows(), op.payload_b().cols()));
      return {op.payload_b().cols(), out.cols};
    case LinOp::Kind::RightMult:
      if (out.cols != op.payload_a().cols())
        throw ShapeError("RightMult: output " + shape_str(out) + " does not match A " +
                         shape_str(op.payload_a().rows(), op.payload_a().cols()));
      return {out.rows, op.payload_a().rows()};
    case LinOp::Kind::Hadamard:
    case LinOp::Kind::TransposeDot:
      return {op.payload_a().rows(), op.payload_a().cols()};
    case LinOp::Kind::Kron:
      return {op.payload_b().cols(), op.payload_a().cols()};
    case LinOp::Kind::Negate:
      return input_from_output(op.inner(), out);
    case LinOp::Kind::Compose:
      return input_from_output(op.inner(), input_from_output(op.outer(), out));
  }
  throw DomainError("input_from_output: unknown operator kind");
}

}  // namespace

std::optional<Shape> fixed_input(const LinOp& op) {
  switch (op.kind()) {
    case LinOp::Kind::Identity:
    case LinOp::Kind::Zero:
    case LinOp::Kind::LeftMult:
    case LinOp::Kind::RightMult:
      return std::nullopt;
    case LinOp::Kind::Hadamard:
    case LinOp::Kind::TransposeDot:
      return Shape{op.payload_a().rows(), op.payload_a().cols()};
    case LinOp::Kind::Kron:
      return Shape{op.payload_b().cols(), op.payload_a().cols()};
    case LinOp::Kind::Negate:
      return fixed_input(op.inner());
    case LinOp::Kind::Compose: {
      if (auto in = fixed_input(op.inner())) return in;
      if (auto mid = fixed_input(op.outer())) return input_from_output(op.inner(), *mid);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Matrix apply(const LinOp& op, const Matrix& x) {
  auto expect = [&](bool ok, Shape want) {
    if (!ok)
      throw ShapeError(std::string(kind_name(op.kind())) + ": operand " +
                       shape_str(x.rows(), x.cols()) + " incompatible, expected " + shape_str(want));
  };
  switch (op.kind()) {
    case LinOp::Kind::Identity:
      return x;
    case LinOp::Kind::Zero:
      return Matrix::zeros(x.rows(), x.cols());
    case LinOp::Kind::LeftMult:
      expect(x.rows() == op.payload_b().cols(), {op.payload_b().cols(), x.cols()});
      return op.payload_b() * x;
    case LinOp::Kind::RightMult:
      expect(x.cols() == op.payload_a().rows(), {x.rows(), op.payload_a().rows()});
      return x * op.payload_a();
    case LinOp::Kind::Hadamard:
      expect(x.same_shape(op.payload_a()), op.payload_a().shape());
      return op.payload_a().hadamard(x);
    case LinOp::Kind::Kron:
      expect(x.rows() == op.payload_b().cols() && x.cols() == op.payload_a().cols(),
             {op.payload_b().cols(), op.payload_a().cols()});
      return op.payload_b() * x * op.payload_a().transpose();
    case LinOp::Kind::TransposeDot: {
      expect(x.same_shape(op.payload_a()), op.payload_a().shape());
      Matrix r(1, 1);
      r(0, 0) = op.payload_a().dot(x);
      return r;
    }
    case LinOp::Kind::Negate:
      return -apply(op.inner(), x);
    case LinOp::Kind::Compose:
      return apply(op.outer(), apply(op.inner(), x));
  }
  throw DomainError("apply: unknown operator kind");
}

LinOp adjoint(const LinOp& op) {
  switch (op.kind()) {
    case LinOp::Kind::Identity:
      return LinOp::identity();
    case LinOp::Kind::Zero:
      return LinOp::zero();
    case LinOp::Kind::LeftMult:
      return LinOp::left_mult(op.payload_b().transpose());
    case LinOp::Kind::RightMult:
      return LinOp::right_mult(op.payload_a().transpose());
    case LinOp::Kind::Hadamard:
      return op;
    case LinOp::Kind::Kron:
      return LinOp::kron(op.payload_a().transpose(), op.payload_b().transpose());
    case LinOp::Kind::TransposeDot:
      throw DomainError("adjoint(TransposeDot) is unsupported: it would map scalars to matrices");
    case LinOp::Kind::Negate:
      return negate(adjoint(op.inner()));
    case LinOp::Kind::Compose:
      return compose(adjoint(op.inner()), adjoint(op.outer()));
  }
  throw DomainError("adjoint: unknown operator kind");
}

Matrix dense(const LinOp& op, Shape in) {
  // Validates `in` against the operator as a side effect.
  PartialShape out = forward_shape(op, {in.rows, in.cols});
  switch (op.kind()) {
    case LinOp::Kind::Identity:
      return Matrix::identity(in.rows * in.cols);
    case LinOp::Kind::Zero:
      return Matrix::zeros(in.rows * in.cols, in.rows * in.cols);
    case LinOp::Kind::LeftMult:
      return Matrix::identity(in.cols).kron(op.payload_b());
    case LinOp::Kind::RightMult:
      return op.payload_a().transpose().kron(Matrix::identity(in.rows));
    case LinOp::Kind::Hadamard:
      return diag_of_vec(op.payload_a());
    case LinOp::Kind::Kron:
      return op.payload_a().kron(op.payload_b());
    case LinOp::Kind::TransposeDot:
      return op.payload_a().vec().transpose();
    case LinOp::Kind::Negate:
      return -dense(op.inner(), in);
    case LinOp::Kind::Compose: {
      Matrix dq = dense(op.inner(), in);
      PartialShape mid = forward_shape(op.inner(), {in.rows, in.cols});
      Matrix dp = dense(op.outer(), Shape{*mid.rows, *mid.cols});
      return dp * dq;
    }
  }
  (void)out;
  throw DomainError("dense: unknown operator kind");
}

Matrix dense(const LinOp& op) {
  auto in = fixed_input(op);
  if (!in)
    throw ShapeError(std::string("dense(") + kind_name(op.kind()) +
                     "): polymorphic shape unresolved, pass an explicit input shape");
  return dense(op, *in);
}

bool tdot_pushthrough_check(const LinOp& l, const Matrix& g, const Matrix& x, double tol) {
  const Matrix lt_g = apply(adjoint(l), g);
  const double lhs = apply(LinOp::transpose_dot(lt_g), x)(0, 0);
  const double rhs = apply(compose(LinOp::transpose_dot(g), l), x)(0, 0);
  const double diff = std::abs(lhs - rhs);
  const double denom = std::max(std::abs(lhs), std::abs(rhs));
  return diff <= tol * denom || diff <= 1e-12;
}

bool structurally_equal(const LinOp& a, const LinOp& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case LinOp::Kind::Identity:
    case LinOp::Kind::Zero:
      return true;
    case LinOp::Kind::LeftMult:
      return a.payload_b() == b.payload_b();
    case LinOp::Kind::RightMult:
    case LinOp::Kind::Hadamard:
    case LinOp::Kind::TransposeDot:
      return a.payload_a() == b.payload_a();
    case LinOp::Kind::Kron:
      return a.payload_a() == b.payload_a() && a.payload_b() == b.payload_b();
    case LinOp::Kind::Negate:
      return structurally_equal(a.inner(), b.inner());
    case LinOp::Kind::Compose:
      return structurally_equal(a.outer(), b.outer()) && structurally_equal(a.inner(), b.inner());
  }
  return false;
}

}  // namespace opslash
