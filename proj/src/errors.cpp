#include "sl/errors.hpp"

namespace sl {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::missing_value: return "MissingValue";
    case ErrorCode::non_numeric_cell: return "NonNumericCell";
    case ErrorCode::unknown_column: return "UnknownColumn";
    case ErrorCode::single_class_outcome: return "SingleClassOutcome";
    case ErrorCode::all_covariates_dropped: return "AllCovariatesDropped";
    case ErrorCode::invalid_v: return "InvalidV";
    case ErrorCode::fold_out_of_range: return "FoldOutOfRange";
    case ErrorCode::single_class: return "SingleClass";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::empty_input: return "EmptyInput";
    case ErrorCode::unknown_covariate: return "UnknownCovariate";
    case ErrorCode::invalid_hyperparam: return "InvalidHyperparam";
    case ErrorCode::incompatible_outcome: return "IncompatibleOutcome";
    case ErrorCode::singular_design: return "SingularDesign";
    case ErrorCode::non_convergence: return "NonConvergence";
    case ErrorCode::schema_mismatch: return "SchemaMismatch";
    case ErrorCode::non_finite_risk: return "NonFiniteRisk";
    case ErrorCode::degenerate_weights: return "DegenerateWeights";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::all_candidates_failed: return "AllCandidatesFailed";
    case ErrorCode::invalid_config: return "InvalidConfig";
    case ErrorCode::corrupt_archive: return "CorruptArchive";
    case ErrorCode::version_mismatch: return "VersionMismatch";
    case ErrorCode::io_error: return "IoError";
  }
  return "UnknownError";
}

bool Error::is_input_error() const noexcept {
  switch (code_) {
    case ErrorCode::missing_value:
    case ErrorCode::non_numeric_cell:
    case ErrorCode::unknown_column:
    case ErrorCode::single_class_outcome:
    case ErrorCode::invalid_v:
    case ErrorCode::unknown_covariate:
    case ErrorCode::invalid_hyperparam:
    case ErrorCode::incompatible_outcome:
    case ErrorCode::schema_mismatch:
    case ErrorCode::invalid_config:
    case ErrorCode::corrupt_archive:
    case ErrorCode::version_mismatch:
    case ErrorCode::io_error:
      return true;
    default:
      return false;
  }
}

}  // namespace sl
