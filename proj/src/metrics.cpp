#include "sl/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "sl/errors.hpp"
#include "sl/kernels.hpp"

namespace sl {

Metric Metric::make(MetricId id) {
  Metric m;
  m.id = id;
  switch (id) {
    case MetricId::mse:
      m.orientation = Orientation::minimize;
      m.scoped_to_both = true;
      break;
    case MetricId::nll:
      m.orientation = Orientation::minimize;
      m.outcome_scope = OutcomeType::binary;
      break;
    case MetricId::auc:
      m.orientation = Orientation::maximize;
      m.outcome_scope = OutcomeType::binary;
      break;
  }
  return m;
}

std::string_view metric_name(MetricId id) {
  switch (id) {
    case MetricId::mse: return "mse";
    case MetricId::nll: return "nll";
    case MetricId::auc: return "auc";
  }
  return "?";
}

MetricId metric_from_name(std::string_view name) {
  if (name == "mse") return MetricId::mse;
  if (name == "nll") return MetricId::nll;
  if (name == "auc") return MetricId::auc;
  throw_error(ErrorCode::invalid_config, "unknown metric '" + std::string(name) + "'");
}

namespace {

// Mean over clusters of the within-cluster mean of `loss`.
double cluster_mean(std::span<const double> loss, std::span<const long long> cluster_id) {
  std::vector<long long> order;            // first-appearance order
  std::unordered_map<long long, std::pair<double, std::size_t>> agg;  // sum, count
  for (std::size_t i = 0; i < loss.size(); ++i) {
    auto [it, inserted] = agg.try_emplace(cluster_id[i], 0.0, 0);
    if (inserted) order.push_back(cluster_id[i]);
    it->second.first += loss[i];
    it->second.second += 1;
  }
  double total = 0.0;
  for (long long id : order) {
    const auto& [sum, count] = agg[id];
    total += sum / static_cast<double>(count);
  }
  return total / static_cast<double>(order.size());
}

void check_lengths(std::span<const double> y, std::span<const double> yhat,
                   const ClusterIds& cluster_id) {
  if (y.size() != yhat.size())
    throw_error(ErrorCode::length_mismatch, "y and predictions differ in length");
  if (y.empty()) throw_error(ErrorCode::empty_input, "empty evaluation input");
  if (cluster_id && cluster_id->size() != y.size())
    throw_error(ErrorCode::length_mismatch, "cluster_id length != n");
}

}  // namespace

double mse(std::span<const double> y, std::span<const double> yhat,
           ClusterIds cluster_id) {
  check_lengths(y, yhat, cluster_id);
  if (!cluster_id)
    return kernels::sse(y, yhat) / static_cast<double>(y.size());
  std::vector<double> loss(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double d = y[i] - yhat[i];
    loss[i] = d * d;
  }
  return cluster_mean(loss, *cluster_id);
}

double nll(std::span<const double> y, std::span<const double> p,
           ClusterIds cluster_id, double eps) {
  check_lengths(y, p, cluster_id);
  std::vector<double> loss(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double pt = std::clamp(p[i], eps, 1.0 - eps);
    loss[i] = -(y[i] * std::log(pt) + (1.0 - y[i]) * std::log(1.0 - pt));
  }
  if (!cluster_id)
    return kernels::sum(loss) / static_cast<double>(loss.size());
  return cluster_mean(loss, *cluster_id);
}

double auc(std::span<const double> y, std::span<const double> p) {
  if (y.size() != p.size())
    throw_error(ErrorCode::length_mismatch, "y and scores differ in length");
  const std::size_t n = y.size();
  std::size_t n1 = 0;
  for (double v : y) n1 += (v == 1.0) ? 1 : 0;
  const std::size_t n0 = n - n1;
  if (n1 == 0 || n0 == 0)
    throw_error(ErrorCode::single_class, "auc requires both classes");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return p[a] < p[b]; });

  // midranks: tied scores share the average of their 1-based rank range
  double rank_sum_pos = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && p[order[j + 1]] == p[order[i]]) ++j;
    const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k)
      if (y[order[k]] == 1.0) rank_sum_pos += midrank;
    i = j + 1;
  }
  const double u = rank_sum_pos - static_cast<double>(n1) * (static_cast<double>(n1) + 1.0) / 2.0;
  return u / (static_cast<double>(n1) * static_cast<double>(n0));
}

std::vector<double> truncate_predictions(std::span<const double> yhat,
                                         std::span<const double> y_train,
                                         OutcomeType outcome_type) {
  std::vector<double> out(yhat.begin(), yhat.end());
  double lo = 0.0, hi = 1.0;
  if (outcome_type == OutcomeType::continuous) {
    if (y_train.empty())
      throw_error(ErrorCode::empty_input, "truncate_predictions needs training outcomes");
    const auto [mn, mx] = std::minmax_element(y_train.begin(), y_train.end());
    lo = *mn;
    hi = *mx;
  }
  kernels::clip(out, lo, hi);
  return out;
}

CVRisk cv_risk(std::span<const double> fold_losses, const Metric& metric) {
  if (fold_losses.empty())
    throw_error(ErrorCode::empty_input, "cv_risk needs at least one fold");
  CVRisk r;
  r.per_fold.assign(fold_losses.begin(), fold_losses.end());
  r.mean_risk = kernels::sum(fold_losses) / static_cast<double>(fold_losses.size());
  r.metric = metric;
  return r;
}

}  // namespace sl
