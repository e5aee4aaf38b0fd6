#pragma once

#include <span>
#include <vector>

#include "sl/matrix.hpp"

namespace sl::stats {

double mean(std::span<const double> v);

/// Pearson correlation; returns 0 when either side is constant.
double pearson(std::span<const double> a, std::span<const double> b);

/// Column-wise centering/scaling parameters. Scale is the population
/// standard deviation sqrt(mean((x - c)^2)); zero-variance columns get
/// scale 1 so they standardize to all-zero columns.
struct Standardizer {
  std::vector<double> center;
  std::vector<double> scale;
};

Standardizer fit_standardizer(const Matrix& x);
Matrix apply_standardizer(const Standardizer& s, const Matrix& x);

}  // namespace sl::stats
