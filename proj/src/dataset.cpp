#include "sl/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "sl/kernels.hpp"

namespace sl {

std::string_view outcome_type_name(OutcomeType t) {
  return t == OutcomeType::continuous ? "continuous" : "binary";
}

OutcomeType outcome_type_from_name(std::string_view name) {
  if (name == "continuous") return OutcomeType::continuous;
  if (name == "binary") return OutcomeType::binary;
  throw_error(ErrorCode::invalid_config,
              "unknown outcome_type '" + std::string(name) + "'");
}

void validate_dataset(const AnalyticDataset& d) {
  const std::size_t n = d.y.size();
  const std::size_t p = d.x.cols();
  if (n < 2) throw_error(ErrorCode::invalid_config, "dataset needs n >= 2 rows");
  if (p < 1) throw_error(ErrorCode::all_covariates_dropped, "dataset has no covariates");
  if (d.x.rows() != n)
    throw_error(ErrorCode::length_mismatch, "x rows != y length");
  if (d.covariate_names.size() != p)
    throw_error(ErrorCode::length_mismatch, "covariate_names size != p");
  std::unordered_set<std::string> seen;
  for (const auto& name : d.covariate_names)
    if (!seen.insert(name).second)
      throw_error(ErrorCode::invalid_config, "duplicate covariate name '" + name + "'");
  for (double v : d.x.data())
    if (!std::isfinite(v))
      throw_error(ErrorCode::missing_value, "non-finite value in x");
  bool saw0 = false, saw1 = false;
  for (double v : d.y) {
    if (!std::isfinite(v)) throw_error(ErrorCode::missing_value, "non-finite value in y");
    if (d.outcome_type == OutcomeType::binary) {
      if (v == 0.0)
        saw0 = true;
      else if (v == 1.0)
        saw1 = true;
      else
        throw_error(ErrorCode::non_numeric_cell,
                    "binary outcome '" + d.outcome_name + "' has level " +
                        std::to_string(v) + "; only 0 and 1 are allowed");
    }
  }
  if (d.outcome_type == OutcomeType::binary && !(saw0 && saw1))
    throw_error(ErrorCode::single_class_outcome,
                "binary outcome '" + d.outcome_name + "' has a single class");
  if (d.cluster_id && d.cluster_id->size() != n)
    throw_error(ErrorCode::length_mismatch, "cluster_id length != n");
}

EffectiveSampleSize effective_sample_size(const AnalyticDataset& d) {
  EffectiveSampleSize out;
  if (d.cluster_id) {
    // unit = cluster; a cluster counts as an event if any of its rows does
    std::unordered_map<long long, bool> any_event;
    for (std::size_t i = 0; i < d.n(); ++i) {
      bool& flag = any_event[(*d.cluster_id)[i]];
      if (d.y[i] == 1.0) flag = true;
    }
    out.n = any_event.size();
    if (d.outcome_type == OutcomeType::binary) {
      std::size_t events = 0;
      for (const auto& [id, flag] : any_event) events += flag ? 1 : 0;
      out.n_rare = std::min(events, out.n - events);
    }
  } else {
    out.n = d.n();
    if (d.outcome_type == OutcomeType::binary) {
      std::size_t events = 0;
      for (double v : d.y) events += (v == 1.0) ? 1 : 0;
      out.n_rare = std::min(events, out.n - events);
    }
  }
  out.n_eff = (d.outcome_type == OutcomeType::binary)
                  ? std::min(out.n, 5 * *out.n_rare)
                  : out.n;
  return out;
}

double quantile_type7(std::span<const double> sorted, double prob) {
  const std::size_t n = sorted.size();
  if (n == 0) throw_error(ErrorCode::empty_input, "quantile of empty sample");
  if (n == 1) return sorted[0];
  const double h = static_cast<double>(n - 1) * prob;
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, n - 1);
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

namespace {

double pearson(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  const double ma = kernels::sum(a) / static_cast<double>(n);
  const double mb = kernels::sum(b) / static_cast<double>(n);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

}  // namespace

std::pair<AnalyticDataset, PreprocessLog> preprocess(const AnalyticDataset& d,
                                                     const PreprocessOptions& opts) {
  if (!(opts.sparse_threshold > 0.0 && opts.sparse_threshold <= 1.0))
    throw_error(ErrorCode::invalid_hyperparam, "sparse_threshold must be in (0, 1]");
  if (!(opts.corr_threshold > 0.0 && opts.corr_threshold <= 1.0))
    throw_error(ErrorCode::invalid_hyperparam, "corr_threshold must be in (0, 1]");
  if (!(opts.outlier_k > 0.0))
    throw_error(ErrorCode::invalid_hyperparam, "outlier_k must be positive");
  validate_dataset(d);

  PreprocessLog log;

  // Outlier rows first (continuous y only), iterating the fence to a fixed
  // point so a second preprocess pass is a no-op.
  std::vector<int> keep_rows(d.n());
  for (std::size_t i = 0; i < d.n(); ++i) keep_rows[i] = static_cast<int>(i);
  if (opts.omit_outliers && d.outcome_type == OutcomeType::continuous) {
    bool changed = true;
    while (changed && keep_rows.size() > 1) {
      changed = false;
      std::vector<double> ys;
      ys.reserve(keep_rows.size());
      for (int r : keep_rows) ys.push_back(d.y[static_cast<std::size_t>(r)]);
      std::sort(ys.begin(), ys.end());
      const double q1 = quantile_type7(ys, 0.25);
      const double q3 = quantile_type7(ys, 0.75);
      const double iqr = q3 - q1;
      const double lo = q1 - opts.outlier_k * iqr;
      const double hi = q3 + opts.outlier_k * iqr;
      std::vector<int> next;
      next.reserve(keep_rows.size());
      for (int r : keep_rows) {
        const double v = d.y[static_cast<std::size_t>(r)];
        if (v < lo || v > hi) {
          log.omitted_outlier_rows.push_back(static_cast<std::size_t>(r));
          changed = true;
        } else {
          next.push_back(r);
        }
      }
      keep_rows = std::move(next);
    }
    std::sort(log.omitted_outlier_rows.begin(), log.omitted_outlier_rows.end());
  }

  const std::size_t nr = keep_rows.size();
  const std::size_t p = d.p();
  std::vector<std::vector<double>> cols(p);
  for (std::size_t j = 0; j < p; ++j) {
    cols[j].resize(nr);
    for (std::size_t i = 0; i < nr; ++i)
      cols[j][i] = d.x.at(static_cast<std::size_t>(keep_rows[i]), j);
  }

  std::vector<bool> dropped(p, false);

  // constant columns
  for (std::size_t j = 0; j < p; ++j) {
    const auto [mn, mx] = std::minmax_element(cols[j].begin(), cols[j].end());
    if (*mn == *mx) {
      dropped[j] = true;
      log.dropped_constant.push_back(d.covariate_names[j]);
    }
  }

  // extremely sparse two-valued columns
  for (std::size_t j = 0; j < p; ++j) {
    if (dropped[j]) continue;
    std::set<double> distinct(cols[j].begin(), cols[j].end());
    if (distinct.size() != 2) continue;
    std::size_t count_first = 0;
    const double first = *distinct.begin();
    for (double v : cols[j]) count_first += (v == first) ? 1 : 0;
    const double minority =
        static_cast<double>(std::min(count_first, nr - count_first)) /
        static_cast<double>(nr);
    if (minority < opts.sparse_threshold) {
      dropped[j] = true;
      log.dropped_sparse.push_back(d.covariate_names[j]);
    }
  }

  // highly correlated pairs: keep the earlier column in file order
  for (std::size_t j = 0; j < p; ++j) {
    if (dropped[j]) continue;
    for (std::size_t k = j + 1; k < p; ++k) {
      if (dropped[k]) continue;
      if (std::abs(pearson(cols[j], cols[k])) > opts.corr_threshold) {
        dropped[k] = true;
        log.dropped_correlated.emplace_back(d.covariate_names[j], d.covariate_names[k]);
      }
    }
  }

  std::vector<std::size_t> kept_cols;
  for (std::size_t j = 0; j < p; ++j)
    if (!dropped[j]) kept_cols.push_back(j);
  if (kept_cols.empty())
    throw_error(ErrorCode::all_covariates_dropped,
                "preprocess dropped every covariate");

  AnalyticDataset out;
  out.outcome_type = d.outcome_type;
  out.outcome_name = d.outcome_name;
  out.x = Matrix(nr, kept_cols.size());
  out.y.resize(nr);
  for (std::size_t i = 0; i < nr; ++i) {
    out.y[i] = d.y[static_cast<std::size_t>(keep_rows[i])];
    for (std::size_t c = 0; c < kept_cols.size(); ++c)
      out.x.at(i, c) = cols[kept_cols[c]][i];
  }
  for (std::size_t c : kept_cols) out.covariate_names.push_back(d.covariate_names[c]);
  if (d.cluster_id) {
    std::vector<long long> cid(nr);
    for (std::size_t i = 0; i < nr; ++i)
      cid[i] = (*d.cluster_id)[static_cast<std::size_t>(keep_rows[i])];
    out.cluster_id = std::move(cid);
  }
  validate_dataset(out);
  return {std::move(out), std::move(log)};
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

namespace {

bool is_na_token(const std::string& s) {
  if (s.empty()) return true;
  std::string lower;
  lower.reserve(s.size());
  for (char c : s) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return lower == "na" || lower == "nan";
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

// One RFC 4180 record; handles quoted fields and embedded newlines.
bool read_record(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  std::string field;
  bool in_quotes = false;
  bool saw_any = false;
  int c;
  while ((c = in.get()) != EOF) {
    saw_any = true;
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          field.push_back('"');
          in.get();
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(static_cast<char>(c));
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else if (c == '\n') {
      break;
    } else if (c != '\r') {
      field.push_back(static_cast<char>(c));
    }
  }
  if (!saw_any) return false;
  fields.push_back(field);
  return true;
}

double parse_cell(const std::string& raw, std::size_t data_row, const std::string& col) {
  const std::string s = trim(raw);
  if (is_na_token(s))
    throw_error(ErrorCode::missing_value, "missing value at row " +
                                              std::to_string(data_row) + ", column '" +
                                              col + "'");
  const char* begin = s.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(v))
    throw_error(ErrorCode::non_numeric_cell, "non-numeric value '" + s + "' at row " +
                                                 std::to_string(data_row) +
                                                 ", column '" + col + "'");
  return v;
}

}  // namespace

std::size_t CsvTable::column_index(const std::string& name) const {
  for (std::size_t j = 0; j < header.size(); ++j)
    if (header[j] == name) return j;
  throw_error(ErrorCode::unknown_column, "column '" + name + "' not found in CSV");
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_error(ErrorCode::io_error, "cannot open '" + path + "'");

  CsvTable table;
  std::vector<std::string> fields;
  if (!read_record(in, fields) || fields.empty())
    throw_error(ErrorCode::io_error, "'" + path + "' has no header row");
  for (auto& f : fields) table.header.push_back(trim(f));

  std::vector<double> values;
  std::size_t rows = 0;
  while (read_record(in, fields)) {
    if (fields.size() == 1 && trim(fields[0]).empty()) continue;  // blank line
    ++rows;
    if (fields.size() != table.header.size())
      throw_error(ErrorCode::io_error,
                  "row " + std::to_string(rows) + " has " +
                      std::to_string(fields.size()) + " fields, expected " +
                      std::to_string(table.header.size()));
    for (std::size_t j = 0; j < fields.size(); ++j)
      values.push_back(parse_cell(fields[j], rows, table.header[j]));
  }
  table.cells = Matrix(rows, table.header.size());
  std::copy(values.begin(), values.end(), table.cells.data().begin());
  return table;
}

AnalyticDataset load_csv(const std::string& path, const std::string& outcome_name,
                         const std::vector<std::string>& covariate_names,
                         const std::optional<std::string>& cluster_name,
                         OutcomeType outcome_type) {
  const CsvTable table = read_csv(path);
  const std::size_t n = table.cells.rows();
  const std::size_t y_col = table.column_index(outcome_name);

  std::optional<std::size_t> cluster_col;
  if (cluster_name) cluster_col = table.column_index(*cluster_name);

  std::vector<std::string> cov_names = covariate_names;
  if (cov_names.empty()) {
    for (const auto& h : table.header)
      if (h != outcome_name && (!cluster_name || h != *cluster_name))
        cov_names.push_back(h);
  }

  AnalyticDataset d;
  d.outcome_name = outcome_name;
  d.outcome_type = outcome_type;
  d.covariate_names = cov_names;
  d.x = Matrix(n, cov_names.size());
  for (std::size_t c = 0; c < cov_names.size(); ++c) {
    const std::size_t j = table.column_index(cov_names[c]);
    for (std::size_t i = 0; i < n; ++i) d.x.at(i, c) = table.cells.at(i, j);
  }
  d.y.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = table.cells.at(i, y_col);
    if (outcome_type == OutcomeType::binary && v != 0.0 && v != 1.0)
      throw_error(ErrorCode::non_numeric_cell,
                  "invalid binary level " + std::to_string(v) + " at row " +
                      std::to_string(i + 1) + ", column '" + outcome_name + "'");
    d.y[i] = v;
  }
  if (cluster_col) {
    std::vector<long long> cid(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double v = table.cells.at(i, *cluster_col);
      if (v != std::floor(v))
        throw_error(ErrorCode::non_numeric_cell,
                    "cluster id must be an integer at row " + std::to_string(i + 1) +
                        ", column '" + *cluster_name + "'");
      cid[i] = static_cast<long long>(v);
    }
    d.cluster_id = std::move(cid);
  }
  validate_dataset(d);
  return d;
}

}  // namespace sl
