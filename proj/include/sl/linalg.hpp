#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sl/matrix.hpp"

namespace sl::linalg {

/// Solves A x = b for symmetric positive-definite A (row-major, n x n).
/// Returns false when a non-positive pivot is met (A not PD to working
/// precision); A and b are left in an unspecified state in that case.
bool cholesky_solve(Matrix a, std::vector<double> b, std::vector<double>& x);

struct LstsqResult {
  std::vector<double> coef;
  bool rank_deficient = false;  // some |R_jj| below tolerance
};

/// Least-squares solve of min ||A x - b||^2 via Householder QR (m >= n).
/// Rank deficiency is reported, not repaired: coefficients for pivots with
/// |R_jj| <= rcond * max|R_kk| are set to zero and the flag is raised.
LstsqResult householder_lstsq(Matrix a, std::vector<double> b, double rcond = 1e-12);

}  // namespace sl::linalg
