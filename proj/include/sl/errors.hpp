#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sl {

enum class ErrorCode {
  missing_value,
  non_numeric_cell,
  unknown_column,
  single_class_outcome,
  all_covariates_dropped,
  invalid_v,
  fold_out_of_range,
  single_class,
  length_mismatch,
  empty_input,
  unknown_covariate,
  invalid_hyperparam,
  incompatible_outcome,
  singular_design,
  non_convergence,
  schema_mismatch,
  non_finite_risk,
  degenerate_weights,
  dimension_mismatch,
  all_candidates_failed,
  invalid_config,
  corrupt_archive,
  version_mismatch,
  io_error,
};

std::string_view error_code_name(ErrorCode code);

/// All library failures are thrown as sl::Error. `code` is a stable,
/// scriptable identifier; `what()` carries the human-readable context
/// (row/column names, iteration counts, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// true for errors caused by bad input (files, configs, schemas) as
  /// opposed to runtime/numeric failures. CLI maps this to exit code 2 vs 3.
  bool is_input_error() const noexcept;

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, std::string message) {
  throw Error(code, std::move(message));
}

}  // namespace sl
