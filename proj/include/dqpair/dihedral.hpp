#pragma once

#include <array>
#include <string>

#include "dqpair/matrix.hpp"

namespace dqpair::dihedral {

// Element indices of the order-8 dihedral group <x, y | x^4 = y^2 = 1, yx = x^3 y>,
// realized as 4x4 permutation matrices with x the 4-cycle and y the double swap.
inline constexpr int kOne = 0;
inline constexpr int kX = 1;
inline constexpr int kX2 = 2;
inline constexpr int kX3 = 3;
inline constexpr int kY = 4;
inline constexpr int kXY = 5;
inline constexpr int kX2Y = 6;
inline constexpr int kX3Y = 7;
inline constexpr int kOrder = 8;

struct GroupData {
  std::array<IntMatrix, kOrder> matrices;
  std::array<std::string, kOrder> names;
  std::array<std::array<int, kOrder>, kOrder> table;  // table[i][j] = index of M_i * M_j
  std::array<int, kOrder> inverse;
  std::array<bool, kOrder> in_H;  // centralizer of y: {1, x^2, y, x^2 y}
  std::array<bool, kOrder> in_K;  // centralizer of x: {1, x, x^2, x^3}
};

/// The verified group data. The first call multiplies out the table and checks
/// every defining identity (group laws, 1 + x^2 = xy + x^3 y, the J_4 sums of
/// each subgroup half); failures throw InternalError.
const GroupData& group_table();

int multiply(int i, int j);
int inverse(int i);
const IntMatrix& matrix_of(int i);
const std::string& name_of(int i);

}  // namespace dqpair::dihedral
