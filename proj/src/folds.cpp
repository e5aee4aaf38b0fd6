#include "sl/folds.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_map>

#include "sl/errors.hpp"
#include "sl/rng.hpp"

namespace sl {

std::string_view cv_scheme_name(CvScheme s) {
  switch (s) {
    case CvScheme::vfold: return "vfold";
    case CvScheme::stratified: return "stratified";
    case CvScheme::clustered: return "clustered";
    case CvScheme::loocv: return "loocv";
  }
  return "?";
}

CvScheme cv_scheme_from_name(std::string_view name) {
  if (name == "vfold") return CvScheme::vfold;
  if (name == "stratified") return CvScheme::stratified;
  if (name == "clustered") return CvScheme::clustered;
  if (name == "loocv") return CvScheme::loocv;
  throw_error(ErrorCode::invalid_config, "unknown cv scheme '" + std::string(name) + "'");
}

namespace {

// Balanced label vector 1..v (sizes differ by at most one), shuffled.
std::vector<int> balanced_labels(std::size_t n, int v, Rng& rng) {
  std::vector<int> labels;
  labels.reserve(n);
  const std::size_t base = n / static_cast<std::size_t>(v);
  const std::size_t extra = n % static_cast<std::size_t>(v);
  for (int f = 1; f <= v; ++f) {
    const std::size_t count = base + (static_cast<std::size_t>(f) <= extra ? 1 : 0);
    labels.insert(labels.end(), count, f);
  }
  rng.shuffle(labels);
  return labels;
}

void check_v(int v, std::size_t n, const char* what) {
  if (v < 2 || static_cast<std::size_t>(v) > n)
    throw_error(ErrorCode::invalid_v, std::string("v must satisfy 2 <= v <= ") + what +
                                          " (got v=" + std::to_string(v) + ", " + what +
                                          "=" + std::to_string(n) + ")");
}

}  // namespace

FoldAssignment assign_vfold(std::size_t n, int v, std::uint64_t seed) {
  check_v(v, n, "n");
  FoldAssignment fa;
  fa.v = v;
  fa.scheme = CvScheme::vfold;
  fa.seed = seed;
  Rng rng = Rng::from(seed, {fnv1a64("vfold")});
  fa.fold_of = balanced_labels(n, v, rng);
  return fa;
}

FoldAssignment assign_stratified(std::span<const double> y, int v, std::uint64_t seed) {
  const std::size_t n = y.size();
  check_v(v, n, "n");
  std::vector<std::size_t> ones, zeros;
  for (std::size_t i = 0; i < n; ++i) {
    if (y[i] == 1.0)
      ones.push_back(i);
    else if (y[i] == 0.0)
      zeros.push_back(i);
    else
      throw_error(ErrorCode::non_numeric_cell, "stratified CV requires a 0/1 outcome");
  }
  if (ones.empty() || zeros.empty())
    throw_error(ErrorCode::single_class, "stratified CV needs both outcome classes");

  FoldAssignment fa;
  fa.v = v;
  fa.scheme = CvScheme::stratified;
  fa.seed = seed;
  fa.fold_of.assign(n, 0);
  const std::size_t minority = std::min(ones.size(), zeros.size());
  if (static_cast<std::size_t>(v) > minority)
    fa.warnings.push_back("v=" + std::to_string(v) +
                          " exceeds the minority class size (" + std::to_string(minority) +
                          "); some folds will have no events");
  Rng rng1 = Rng::from(seed, {fnv1a64("stratified"), 1});
  Rng rng0 = Rng::from(seed, {fnv1a64("stratified"), 0});
  const std::vector<int> labels1 = balanced_labels(ones.size(), v, rng1);
  const std::vector<int> labels0 = balanced_labels(zeros.size(), v, rng0);
  for (std::size_t k = 0; k < ones.size(); ++k) fa.fold_of[ones[k]] = labels1[k];
  for (std::size_t k = 0; k < zeros.size(); ++k) fa.fold_of[zeros[k]] = labels0[k];
  return fa;
}

FoldAssignment assign_clustered(std::span<const long long> cluster_id, int v,
                                std::uint64_t seed) {
  const std::size_t n = cluster_id.size();
  // distinct clusters in first-appearance order
  std::vector<long long> clusters;
  std::unordered_map<long long, std::size_t> index_of;
  for (long long id : cluster_id) {
    if (index_of.emplace(id, clusters.size()).second) clusters.push_back(id);
  }
  check_v(v, clusters.size(), "number of clusters");

  FoldAssignment fa;
  fa.v = v;
  fa.scheme = CvScheme::clustered;
  fa.seed = seed;
  Rng rng = Rng::from(seed, {fnv1a64("clustered")});
  const std::vector<int> cluster_fold = balanced_labels(clusters.size(), v, rng);
  fa.fold_of.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    fa.fold_of[i] = cluster_fold[index_of[cluster_id[i]]];
  return fa;
}

FoldAssignment assign_loocv(std::size_t n) {
  if (n < 2) throw_error(ErrorCode::invalid_v, "loocv needs n >= 2");
  FoldAssignment fa;
  fa.v = static_cast<int>(n);
  fa.scheme = CvScheme::loocv;
  fa.seed = 0;
  fa.fold_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) fa.fold_of[i] = static_cast<int>(i) + 1;
  return fa;
}

std::vector<int> validation_rows(const FoldAssignment& fa, int fold) {
  if (fold < 1 || fold > fa.v)
    throw_error(ErrorCode::fold_out_of_range,
                "fold " + std::to_string(fold) + " outside 1.." + std::to_string(fa.v));
  std::vector<int> rows;
  for (std::size_t i = 0; i < fa.fold_of.size(); ++i)
    if (fa.fold_of[i] == fold) rows.push_back(static_cast<int>(i));
  return rows;
}

std::vector<int> training_rows(const FoldAssignment& fa, int fold) {
  if (fold < 1 || fold > fa.v)
    throw_error(ErrorCode::fold_out_of_range,
                "fold " + std::to_string(fold) + " outside 1.." + std::to_string(fa.v));
  std::vector<int> rows;
  for (std::size_t i = 0; i < fa.fold_of.size(); ++i)
    if (fa.fold_of[i] != fold) rows.push_back(static_cast<int>(i));
  return rows;
}

void export_folds_csv(const FoldAssignment& fa, std::ostream& out) {
  out << "row_index,fold\n";
  for (std::size_t i = 0; i < fa.fold_of.size(); ++i)
    out << (i + 1) << ',' << fa.fold_of[i] << '\n';
}

}  // namespace sl
