#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <vector>

#include "dqpair/error.hpp"
#include "dqpair/numeric.hpp"

namespace dqpair {

using Index = Eigen::Index;

// Dense exact matrices. Entries never overflow and never round.
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using GaussMatrix = Eigen::Matrix<GaussRat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

// Relation indices of an association scheme, one per cell.
using ColorMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

IntMatrix identity_matrix(Index n);
IntMatrix ones_matrix(Index n);  // all-ones J_n

RatMatrix to_rational(const IntMatrix& m);
GaussMatrix to_gauss(const IntMatrix& m);
GaussMatrix to_gauss(const RatMatrix& m);

bool is_zero_one(const IntMatrix& m);

/// Exact matrix product with an explicit shape check. Operands are evaluated
/// first so that expression arguments (Zero, Constant, blocks) take the same
/// plain-matrix product path as stored matrices.
template <typename D1, typename D2>
auto mat_mul(const Eigen::MatrixBase<D1>& a, const Eigen::MatrixBase<D2>& b) {
  if (a.cols() != b.rows())
    throw ShapeError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  using Plain = typename D1::PlainObject;
  Plain lhs = a.derived();
  Plain rhs_m = b.derived();
  return Plain(lhs.lazyProduct(rhs_m));
}

template <typename D>
auto transpose(const Eigen::MatrixBase<D>& a) {
  return a.transpose().eval();
}

/// Kronecker product; the LEFT factor indexes blocks, so the result has
/// entry (i*b.rows()+i', j*b.cols()+j') = a(i,j) * b(i',j').
template <typename D1, typename D2>
auto kronecker(const Eigen::MatrixBase<D1>& a, const Eigen::MatrixBase<D2>& b) {
  return Eigen::kroneckerProduct(a.derived(), b.derived()).eval();
}

}  // namespace dqpair
