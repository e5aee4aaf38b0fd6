#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace sl {

enum class CvScheme { vfold, stratified, clustered, loocv };

std::string_view cv_scheme_name(CvScheme s);
CvScheme cv_scheme_from_name(std::string_view name);

/// Immutable assignment of every observation to exactly one validation fold.
/// Fold labels are 1-based (1..v).
struct FoldAssignment {
  std::vector<int> fold_of;
  int v = 0;
  CvScheme scheme = CvScheme::vfold;
  std::uint64_t seed = 0;
  std::vector<std::string> warnings;

  std::size_t n() const { return fold_of.size(); }
};

/// Balanced random V-fold split: fold sizes differ by at most one.
FoldAssignment assign_vfold(std::size_t n, int v, std::uint64_t seed);

/// Balanced split performed independently within y=1 and y=0 rows, so each
/// fold's event count deviates from perfect proportionality by at most one.
/// Warns when v exceeds the minority class size (some folds then get zero
/// events).
FoldAssignment assign_stratified(std::span<const double> y, int v, std::uint64_t seed);

/// Whole clusters are balanced across folds; rows inherit their cluster's
/// fold, so no cluster is ever split.
FoldAssignment assign_clustered(std::span<const long long> cluster_id, int v,
                                std::uint64_t seed);

/// Leave-one-out: fold i is the singleton {i}.
FoldAssignment assign_loocv(std::size_t n);

/// Rows with fold_of == fold (1-based fold index).
std::vector<int> validation_rows(const FoldAssignment& fa, int fold);
/// Complement of validation_rows.
std::vector<int> training_rows(const FoldAssignment& fa, int fold);

/// Audit export, two columns: row_index (1-based), fold.
void export_folds_csv(const FoldAssignment& fa, std::ostream& out);

}  // namespace sl
