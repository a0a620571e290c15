#include "dqpair/dihedral.hpp"

namespace dqpair::dihedral {

namespace {

IntMatrix perm4(std::array<int, 4> image) {
  // image[i] = j means row i has its 1 in column j.
  IntMatrix m = IntMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) m(i, image[i]) = 1;
  return m;
}

int match(const std::array<IntMatrix, kOrder>& mats, const IntMatrix& m) {
  for (int i = 0; i < kOrder; ++i)
    if (mats[i] == m) return i;
  throw InternalError("product of group matrices is not a group matrix");
}

GroupData build_and_verify() {
  GroupData d;
  const IntMatrix x = perm4({1, 2, 3, 0});  // 4-cycle
  const IntMatrix y = perm4({1, 0, 3, 2});  // (1 2)(3 4)

  d.matrices[kOne] = identity_matrix(4);
  d.matrices[kX] = x;
  d.matrices[kX2] = mat_mul(x, x);
  d.matrices[kX3] = mat_mul(d.matrices[kX2], x);
  d.matrices[kY] = y;
  d.matrices[kXY] = mat_mul(x, y);
  d.matrices[kX2Y] = mat_mul(d.matrices[kX2], y);
  d.matrices[kX3Y] = mat_mul(d.matrices[kX3], y);
  d.names = {"1", "x", "x2", "x3", "y", "xy", "x2y", "x3y"};

  for (int i = 0; i < kOrder; ++i)
    for (int j = i + 1; j < kOrder; ++j)
      if (d.matrices[i] == d.matrices[j])
        throw InternalError("group matrices are not distinct");

  for (int i = 0; i < kOrder; ++i)
    for (int j = 0; j < kOrder; ++j)
      d.table[i][j] = match(d.matrices, mat_mul(d.matrices[i], d.matrices[j]));

  for (int i = 0; i < kOrder; ++i) {
    d.inverse[i] = -1;
    for (int j = 0; j < kOrder; ++j)
      if (d.table[i][j] == kOne) d.inverse[i] = j;
    if (d.inverse[i] < 0) throw InternalError("group element without inverse");
  }

  // Group laws in matrix form.
  if (mat_mul(d.matrices[kX3], x) != d.matrices[kOne]) throw InternalError("x^4 != 1");
  if (mat_mul(y, y) != d.matrices[kOne]) throw InternalError("y^2 != 1");
  if (d.table[kY][kX] != kX3Y) throw InternalError("y*x != x^3*y");

  // The two-element-sum identity 1 + x^2 = xy + x^3y that drives the product
  // expansions of both constructions.
  if (IntMatrix(d.matrices[kOne] + d.matrices[kX2]) !=
      IntMatrix(d.matrices[kXY] + d.matrices[kX3Y]))
    throw InternalError("1 + x^2 != xy + x^3y");

  // Centralizers, computed from the table.
  for (int g = 0; g < kOrder; ++g) {
    d.in_H[g] = d.table[g][kY] == d.table[kY][g];
    d.in_K[g] = d.table[g][kX] == d.table[kX][g];
  }
  const std::array<bool, kOrder> expect_H = {true, false, true, false, true, false, true, false};
  const std::array<bool, kOrder> expect_K = {true, true, true, true, false, false, false, false};
  if (d.in_H != expect_H) throw InternalError("centralizer of y is not {1,x2,y,x2y}");
  if (d.in_K != expect_K) throw InternalError("centralizer of x is not {1,x,x2,x3}");

  // Each subgroup half sums to J_4.
  IntMatrix sum_H = IntMatrix::Zero(4, 4), sum_notH = IntMatrix::Zero(4, 4);
  IntMatrix sum_K = IntMatrix::Zero(4, 4), sum_notK = IntMatrix::Zero(4, 4);
  for (int g = 0; g < kOrder; ++g) {
    (d.in_H[g] ? sum_H : sum_notH) += d.matrices[g];
    (d.in_K[g] ? sum_K : sum_notK) += d.matrices[g];
  }
  const IntMatrix j4 = ones_matrix(4);
  if (sum_H != j4 || sum_notH != j4 || sum_K != j4 || sum_notK != j4)
    throw InternalError("subgroup halves do not sum to J_4");

  return d;
}

}  // namespace

const GroupData& group_table() {
  static const GroupData data = build_and_verify();
  return data;
}

int multiply(int i, int j) { return group_table().table[i][j]; }
int inverse(int i) { return group_table().inverse[i]; }
const IntMatrix& matrix_of(int i) { return group_table().matrices[i]; }
const std::string& name_of(int i) { return group_table().names[i]; }

}  // namespace dqpair::dihedral
