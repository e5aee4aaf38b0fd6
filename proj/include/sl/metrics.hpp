#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sl/dataset.hpp"

namespace sl {

enum class MetricId { mse, nll, auc };
enum class Orientation { minimize, maximize };

struct Metric {
  MetricId id = MetricId::mse;
  Orientation orientation = Orientation::minimize;
  OutcomeType outcome_scope = OutcomeType::continuous;  // auc/nll: binary only
  bool scoped_to_both = false;                          // mse applies to both

  static Metric make(MetricId id);
  bool compatible_with(OutcomeType t) const {
    return scoped_to_both || outcome_scope == t;
  }
};

std::string_view metric_name(MetricId id);
MetricId metric_from_name(std::string_view name);

struct CVRisk {
  std::vector<double> per_fold;
  double mean_risk = 0.0;
  Metric metric;
};

using ClusterIds = std::optional<std::span<const long long>>;

/// Mean squared error. With clusters: mean over clusters of the
/// within-cluster mean squared error (clusters in first-appearance order).
double mse(std::span<const double> y, std::span<const double> yhat,
           ClusterIds cluster_id = std::nullopt);

/// Mean negative Bernoulli log-likelihood with probabilities clamped to
/// [eps, 1-eps]; cluster aggregation as for mse.
double nll(std::span<const double> y, std::span<const double> p,
           ClusterIds cluster_id = std::nullopt, double eps = 1e-12);

/// Mann-Whitney AUC computed by the midrank formulation in O(n log n);
/// agrees exactly with the all-pairs definition (ties count 1/2).
double auc(std::span<const double> y, std::span<const double> p);

/// Continuous: clip predictions to [min(y_train), max(y_train)].
/// Binary: clip to [0, 1]. Keeps every loss uniformly bounded.
std::vector<double> truncate_predictions(std::span<const double> yhat,
                                         std::span<const double> y_train,
                                         OutcomeType outcome_type);

/// Unweighted mean of per-fold risks.
CVRisk cv_risk(std::span<const double> fold_losses, const Metric& metric);

}  // namespace sl
