#pragma once

#include <vector>

#include "dqpair/matrix.hpp"

namespace dqpair {

enum class ScalarField { rationals, gaussian_rationals };

struct SolveResult {
  RatMatrix solution;
  Index rank = 0;
};

/// Exact solution of a*x = b over the rationals (Gauss-Jordan elimination).
/// The system may be overdetermined; it must be consistent and have a unique
/// solution. Throws SolveError(inconsistent) or SolveError(non_unique).
SolveResult solve_exact(const RatMatrix& a, const RatMatrix& b);

/// Rank by fraction-free (Bareiss) elimination; all intermediates stay integral.
Index fraction_free_rank(IntMatrix m);

/// Rank over the rationals. Rows are scaled integral first, then Bareiss.
Index rational_rank(const RatMatrix& m);

/// Rank over Q(sqrt(-1)) by exact field elimination.
Index gauss_rank(GaussMatrix m);

/// Dimension of the linear span of the given equally-shaped matrices over the
/// chosen scalar field. Over the rationals, real and imaginary parts count as
/// separate coordinates.
Index span_dimension(const std::vector<GaussMatrix>& mats, ScalarField field);

}  // namespace dqpair
