#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sl/matrix.hpp"

namespace sl {

enum class OutcomeType { continuous, binary };

std::string_view outcome_type_name(OutcomeType t);
OutcomeType outcome_type_from_name(std::string_view name);

/// Complete-case analytic data. Construction validates the invariants:
/// finite x and y, binary y in {0,1} with both classes present, unique
/// covariate names, cluster vector length n.
struct AnalyticDataset {
  Matrix x;
  std::vector<double> y;
  OutcomeType outcome_type = OutcomeType::continuous;
  std::optional<std::vector<long long>> cluster_id;
  std::vector<std::string> covariate_names;
  std::string outcome_name;

  std::size_t n() const { return y.size(); }
  std::size_t p() const { return x.cols(); }
};

/// Throws on any invariant violation.
void validate_dataset(const AnalyticDataset& d);

struct EffectiveSampleSize {
  std::size_t n = 0;                       // independent units (clusters if clustered)
  std::optional<std::size_t> n_rare;       // minority class size (binary only)
  std::size_t n_eff = 0;
};

/// Binary: n_eff = min(n, 5 * n_rare) with events counted at the unit level
/// (a cluster is an event if any of its rows has y = 1). Continuous: n_eff = n.
EffectiveSampleSize effective_sample_size(const AnalyticDataset& d);

struct PreprocessOptions {
  double sparse_threshold = 0.01;  // minority-value fraction, two-valued covariates only
  double corr_threshold = 0.95;    // |pearson| above this drops the later column
  bool omit_outliers = false;      // continuous outcomes only
  double outlier_k = 1.5;          // boxplot fence multiplier
};

struct PreprocessLog {
  std::vector<std::string> dropped_constant;
  std::vector<std::string> dropped_sparse;
  std::vector<std::pair<std::string, std::string>> dropped_correlated;  // (kept, dropped)
  std::vector<std::size_t> omitted_outlier_rows;  // 0-based row indices of the input
};

/// Outcome-blind covariate pruning plus optional y-outlier row omission.
///
/// Row omission runs first and iterates the fence [Q1 - k*IQR, Q3 + k*IQR]
/// (type-7 quantiles) to a fixed point; column rules then run on the retained
/// rows (constant, then sparse, then pairwise correlation keeping the earlier
/// column). The whole operation is therefore idempotent.
std::pair<AnalyticDataset, PreprocessLog> preprocess(const AnalyticDataset& d,
                                                     const PreprocessOptions& opts = {});

/// Linear-interpolation quantile (type 7). `sorted` must be ascending, nonempty.
double quantile_type7(std::span<const double> sorted, double prob);

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

/// Parsed CSV: header plus numeric cells. Empty cells and the tokens NA / NaN
/// (case-insensitive) raise MissingValue; anything else non-numeric raises
/// NonNumericCell. Both errors name the offending row and column.
struct CsvTable {
  std::vector<std::string> header;
  Matrix cells;  // rows x header.size()

  std::size_t column_index(const std::string& name) const;  // UnknownColumn
};

CsvTable read_csv(const std::string& path);

/// Builds a dataset from a CSV file. When `covariate_names` is empty, every
/// column except the outcome and cluster columns becomes a covariate, in file
/// order. Binary outcomes accept only values exactly equal to 0 or 1.
AnalyticDataset load_csv(const std::string& path, const std::string& outcome_name,
                         const std::vector<std::string>& covariate_names,
                         const std::optional<std::string>& cluster_name,
                         OutcomeType outcome_type);

}  // namespace sl
