#include "dqpair/linalg.hpp"

#include <string>

namespace dqpair {

SolveResult solve_exact(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows())
    throw ShapeError("solve_exact: a has " + std::to_string(a.rows()) + " rows, b has " +
                     std::to_string(b.rows()));
  const Index m = a.rows();
  const Index k = a.cols();
  const Index c = b.cols();

  RatMatrix aug(m, k + c);
  aug.leftCols(k) = a;
  aug.rightCols(c) = b;

  Index rank = 0;
  std::vector<Index> pivot_col;
  for (Index col = 0; col < k && rank < m; ++col) {
    Index piv = -1;
    for (Index i = rank; i < m; ++i)
      if (aug(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank) aug.row(piv).swap(aug.row(rank));
    Rat inv = Rat(1) / aug(rank, col);
    for (Index j = col; j < k + c; ++j) aug(rank, j) *= inv;
    for (Index i = 0; i < m; ++i) {
      if (i == rank || aug(i, col) == 0) continue;
      Rat f = aug(i, col);
      for (Index j = col; j < k + c; ++j) aug(i, j) -= f * aug(rank, j);
    }
    pivot_col.push_back(col);
    ++rank;
  }

  for (Index i = rank; i < m; ++i)
    for (Index j = 0; j < c; ++j)
      if (aug(i, k + j) != 0)
        throw SolveError(SolveError::Kind::inconsistent,
                         "solve_exact: inconsistent system (residual in equation " +
                             std::to_string(i) + ")");
  if (rank < k)
    throw SolveError(SolveError::Kind::non_unique,
                     "solve_exact: underdetermined system (rank " + std::to_string(rank) +
                         " < " + std::to_string(k) + " unknowns)");

  RatMatrix x(k, c);
  for (Index r = 0; r < rank; ++r) x.row(pivot_col[r]) = aug.block(r, k, 1, c);
  return SolveResult{std::move(x), rank};
}

Index fraction_free_rank(IntMatrix m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  Index rank = 0;
  Int prev(1);
  for (Index col = 0; col < cols && rank < rows; ++col) {
    Index piv = -1;
    for (Index i = rank; i < rows; ++i)
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank) m.row(piv).swap(m.row(rank));
    // Bareiss step: every division below is exact.
    for (Index i = rank + 1; i < rows; ++i) {
      for (Index j = col + 1; j < cols; ++j)
        m(i, j) = (m(i, j) * m(rank, col) - m(i, col) * m(rank, j)) / prev;
      m(i, col) = 0;
    }
    prev = m(rank, col);
    ++rank;
  }
  return rank;
}

Index rational_rank(const RatMatrix& m) {
  IntMatrix z(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    Int scale(1);
    for (Index j = 0; j < m.cols(); ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
                                                 m(i, j).get_den().get_mpz_t());
    for (Index j = 0; j < m.cols(); ++j) {
      Rat v = m(i, j) * Rat(scale);
      z(i, j) = v.get_num();  // denominator is 1 after scaling
    }
  }
  return fraction_free_rank(std::move(z));
}

Index gauss_rank(GaussMatrix m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  Index rank = 0;
  for (Index col = 0; col < cols && rank < rows; ++col) {
    Index piv = -1;
    for (Index i = rank; i < rows; ++i)
      if (!m(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank) m.row(piv).swap(m.row(rank));
    GaussRat p = m(rank, col);
    for (Index i = rank + 1; i < rows; ++i) {
      if (m(i, col).is_zero()) continue;
      GaussRat f = m(i, col) / p;
      for (Index j = col; j < cols; ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

Index span_dimension(const std::vector<GaussMatrix>& mats, ScalarField field) {
  if (mats.empty()) return 0;
  const Index r = mats[0].rows();
  const Index c = mats[0].cols();
  for (const auto& m : mats)
    if (m.rows() != r || m.cols() != c)
      throw ShapeError("span_dimension: matrices have mixed shapes");

  if (field == ScalarField::gaussian_rationals) {
    GaussMatrix v(static_cast<Index>(mats.size()), r * c);
    for (Index t = 0; t < static_cast<Index>(mats.size()); ++t)
      for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j) v(t, i * c + j) = mats[t](i, j);
    return gauss_rank(std::move(v));
  }

  // Over the rationals the real and imaginary parts are independent coordinates.
  RatMatrix v(static_cast<Index>(mats.size()), 2 * r * c);
  for (Index t = 0; t < static_cast<Index>(mats.size()); ++t)
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j) {
        v(t, 2 * (i * c + j)) = mats[t](i, j).re;
        v(t, 2 * (i * c + j) + 1) = mats[t](i, j).im;
      }
  return rational_rank(v);
}

}  // namespace dqpair
