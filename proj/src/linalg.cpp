#include "sl/linalg.hpp"

#include <cmath>

#include "sl/kernels.hpp"

namespace sl::linalg {

bool cholesky_solve(Matrix a, std::vector<double> b, std::vector<double>& x) {
  const std::size_t n = a.rows();
  // in-place lower Cholesky
  for (std::size_t j = 0; j < n; ++j) {
    double d = a.at(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= a.at(j, k) * a.at(j, k);
    if (!(d > 0.0)) return false;
    const double ljj = std::sqrt(d);
    a.at(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a.at(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= a.at(i, k) * a.at(j, k);
      a.at(i, j) = s / ljj;
    }
  }
  // forward then backward substitution
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= a.at(i, k) * b[k];
    b[i] = s / a.at(i, i);
  }
  for (std::size_t ii = n; ii > 0; --ii) {
    const std::size_t i = ii - 1;
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a.at(k, i) * b[k];
    b[i] = s / a.at(i, i);
  }
  x = std::move(b);
  return true;
}

LstsqResult householder_lstsq(Matrix a, std::vector<double> b, double rcond) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  LstsqResult res;
  res.coef.assign(n, 0.0);
  if (m < n || n == 0) {
    res.rank_deficient = true;
    return res;
  }

  // Householder QR, applying reflectors to b as we go.
  for (std::size_t j = 0; j < n; ++j) {
    double norm_sq = 0.0;
    for (std::size_t i = j; i < m; ++i) norm_sq += a.at(i, j) * a.at(i, j);
    const double norm = std::sqrt(norm_sq);
    if (norm == 0.0) continue;  // column already zero below and at the pivot
    const double alpha = (a.at(j, j) >= 0.0) ? -norm : norm;
    // v = x - alpha*e1, stored in place of column j (v_j in vjj)
    const double vjj = a.at(j, j) - alpha;
    const double vnorm_sq = norm_sq - 2.0 * alpha * a.at(j, j) + alpha * alpha;
    if (vnorm_sq > 0.0) {
      const double beta = 2.0 / vnorm_sq;
      for (std::size_t k = j + 1; k < n; ++k) {
        double s = vjj * a.at(j, k);
        for (std::size_t i = j + 1; i < m; ++i) s += a.at(i, j) * a.at(i, k);
        s *= beta;
        a.at(j, k) -= s * vjj;
        for (std::size_t i = j + 1; i < m; ++i) a.at(i, k) -= s * a.at(i, j);
      }
      double s = vjj * b[j];
      for (std::size_t i = j + 1; i < m; ++i) s += a.at(i, j) * b[i];
      s *= beta;
      b[j] -= s * vjj;
      for (std::size_t i = j + 1; i < m; ++i) b[i] -= s * a.at(i, j);
    }
    a.at(j, j) = alpha;
  }

  double max_diag = 0.0;
  for (std::size_t j = 0; j < n; ++j) max_diag = std::max(max_diag, std::abs(a.at(j, j)));
  const double tol = rcond * max_diag;

  // back-substitution on R, zeroing coefficients at negligible pivots
  for (std::size_t jj = n; jj > 0; --jj) {
    const std::size_t j = jj - 1;
    if (std::abs(a.at(j, j)) <= tol) {
      res.coef[j] = 0.0;
      res.rank_deficient = true;
      continue;
    }
    double s = b[j];
    for (std::size_t k = j + 1; k < n; ++k) s -= a.at(j, k) * res.coef[k];
    res.coef[j] = s / a.at(j, j);
  }
  return res;
}

}  // namespace sl::linalg
