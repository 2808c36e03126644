#include "qibonn/data.hpp"

#include <algorithm>
#include <array>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "qibonn/errors.hpp"
#include "qibonn/rng.hpp"

namespace qibonn {

Dataset::Dataset(Matrix x, std::vector<int> labels, int k,
                 std::vector<std::string> feature_names)
    : x_(std::move(x)),
      labels_(std::move(labels)),
      k_(k),
      feature_names_(std::move(feature_names)),
      access_count_(std::make_shared<std::atomic<std::uint64_t>>(0)) {
  if (x_.rows() != labels_.size())
    throw std::invalid_argument("dataset: row/label count mismatch");
  if (x_.cols() != feature_names_.size())
    throw std::invalid_argument("dataset: column/name count mismatch");
}

namespace {

bool is_missing_token(const std::string& s) {
  return s.empty() || s == "?" || s == "NA" || s == "NaN" || s == "nan" ||
         s == "N/A";
}

bool parse_double(const std::string& s, double* out) {
  const char* begin = s.c_str();
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(begin, &end);
  if (end == begin) return false;
  while (*end == ' ' || *end == '\t') ++end;
  if (*end != '\0') return false;
  *out = v;
  return true;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// RFC-ish CSV: commas separate fields, double quotes protect commas and
// newlines, "" inside quotes is a literal quote. Returns one record per
// row, including the header.
std::vector<std::vector<std::string>> parse_csv(const std::string& text,
                                                const std::string& source) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  std::size_t line = 1;

  auto end_field = [&] {
    row.push_back(field_was_quoted ? field : trim(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_row = [&] {
    end_field();
    // Skip rows that are entirely empty (blank lines, trailing newline).
    if (!(row.size() == 1 && row[0].empty())) rows.push_back(row);
    row.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
    } else if (c == '"' && field.empty()) {
      in_quotes = true;
      field_was_quoted = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n') {
      end_row();
      ++line;
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  if (in_quotes)
    throw IngestError(source + ": unterminated quoted field at end of input");
  if (!field.empty() || !row.empty()) end_row();
  (void)line;
  return rows;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

Dataset load_csv_text(const std::string& text, const LoadOptions& options,
                      const std::string& source_name) {
  auto rows = parse_csv(text, source_name);
  if (rows.size() < 2)
    throw IngestError(source_name + ": need a header row and at least one data row");

  const std::vector<std::string>& header = rows[0];
  std::size_t n_cols = header.size();
  if (n_cols < 2)
    throw IngestError(source_name + ": need at least one feature column and a label column");

  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != n_cols) {
      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "%s: row %zu has %zu fields, header has %zu",
                    source_name.c_str(), r + 1, rows[r].size(), n_cols);
      throw IngestError(buf);
    }
  }

  std::size_t label_col = n_cols - 1;
  if (!options.label_column.empty()) {
    auto it = std::find(header.begin(), header.end(), options.label_column);
    if (it == header.end())
      throw IngestError(source_name + ": no column named '" +
                        options.label_column + "'");
    label_col = static_cast<std::size_t>(it - header.begin());
  }

  // Drop rows whose label is missing.
  std::vector<const std::vector<std::string>*> data;
  std::size_t dropped = 0;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (is_missing_token(rows[r][label_col]))
      ++dropped;
    else
      data.push_back(&rows[r]);
  }
  if (data.empty())
    throw IngestError(source_name + ": every row has a missing label");

  std::vector<std::string> warnings;
  if (dropped > 0)
    warnings.push_back(std::to_string(dropped) + " row(s) dropped for missing label");

  // Factorize labels: class names sorted ascending get ids 0..k-1, so for
  // binary data the lexicographically greater value lands on 1 unless a
  // positive label is named explicitly.
  std::set<std::string> class_set;
  for (auto* r : data) class_set.insert((*r)[label_col]);
  std::vector<std::string> class_names(class_set.begin(), class_set.end());
  if (class_names.size() < 2)
    throw IngestError(source_name + ": labels have a single class '" +
                      class_names[0] + "'");
  if (!options.positive_label.empty()) {
    if (class_names.size() != 2)
      throw IngestError(source_name +
                        ": positive_label only applies to binary labels");
    auto it = std::find(class_names.begin(), class_names.end(),
                        options.positive_label);
    if (it == class_names.end())
      throw IngestError(source_name + ": positive_label '" +
                        options.positive_label + "' not present in data");
    // Force the named class to id 1.
    if (it == class_names.begin()) std::swap(class_names[0], class_names[1]);
  }
  std::map<std::string, int> class_id;
  for (std::size_t c = 0; c < class_names.size(); ++c)
    class_id[class_names[c]] = static_cast<int>(c);
  std::vector<int> labels(data.size());
  for (std::size_t r = 0; r < data.size(); ++r)
    labels[r] = class_id[(*data[r])[label_col]];

  // Type each feature column: numeric iff every non-missing value parses
  // as a double and the column was not forced categorical.
  std::size_t n = data.size();
  std::vector<std::vector<double>> columns;  // materialized feature columns
  std::vector<std::string> names;

  for (std::size_t c = 0; c < n_cols; ++c) {
    if (c == label_col) continue;
    bool forced_cat =
        std::find(options.categorical.begin(), options.categorical.end(),
                  header[c]) != options.categorical.end();
    bool numeric = !forced_cat;
    std::vector<double> parsed(n, 0.0);
    std::vector<bool> missing(n, false);
    for (std::size_t r = 0; r < n && numeric; ++r) {
      const std::string& cell = (*data[r])[c];
      if (is_missing_token(cell)) {
        missing[r] = true;
        continue;
      }
      if (!parse_double(cell, &parsed[r])) numeric = false;
    }

    if (numeric) {
      std::vector<double> present;
      for (std::size_t r = 0; r < n; ++r)
        if (!missing[r]) present.push_back(parsed[r]);
      if (present.empty()) {
        warnings.push_back("column '" + header[c] + "' dropped: all values missing");
        continue;
      }
      if (present.size() < n) {
        double med = median(present);
        for (std::size_t r = 0; r < n; ++r)
          if (missing[r]) parsed[r] = med;
        warnings.push_back("column '" + header[c] + "': " +
                           std::to_string(n - present.size()) +
                           " missing value(s) imputed with median");
      }
      columns.push_back(std::move(parsed));
      names.push_back(header[c]);
    } else {
      // One-hot encode; a missing cell becomes its own category.
      std::set<std::string> values;
      for (std::size_t r = 0; r < n; ++r) {
        const std::string& cell = (*data[r])[c];
        values.insert(is_missing_token(cell) ? "__missing__" : cell);
      }
      for (const std::string& v : values) {
        std::vector<double> col(n, 0.0);
        for (std::size_t r = 0; r < n; ++r) {
          const std::string& cell = (*data[r])[c];
          std::string key = is_missing_token(cell) ? "__missing__" : cell;
          if (key == v) col[r] = 1.0;
        }
        columns.push_back(std::move(col));
        names.push_back(header[c] + "=" + v);
      }
    }
  }

  // Standardize, dropping constant columns.
  std::vector<std::vector<double>> kept;
  std::vector<std::string> kept_names;
  std::vector<ColumnStats> stats;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    double mean = 0.0;
    for (double v : columns[c]) mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double v : columns[c]) var += (v - mean) * (v - mean);
    var /= static_cast<double>(n);
    double sd = std::sqrt(var);
    if (sd <= 0.0) {
      warnings.push_back("column '" + names[c] + "' dropped: constant");
      continue;
    }
    for (double& v : columns[c]) v = (v - mean) / sd;
    kept.push_back(std::move(columns[c]));
    kept_names.push_back(names[c]);
    stats.push_back({mean, sd});
  }
  if (kept.empty())
    throw IngestError(source_name + ": no usable feature columns");

  Matrix x(n, kept.size());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < kept.size(); ++c) x(r, c) = kept[c][r];

  Dataset ds(std::move(x), std::move(labels),
             static_cast<int>(class_names.size()), std::move(kept_names));
  ds.set_class_names(std::move(class_names));
  ds.set_standardization(std::move(stats));
  for (auto& w : warnings) ds.add_warning(std::move(w));
  return ds;
}

Dataset load_csv(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_csv_text(buf.str(), options, path);
}

void SplitSpec::validate() const {
  if (!(train_frac > 0.0) || !(val_frac > 0.0) || !(test_frac > 0.0))
    throw SplitError("split fractions must all be positive");
  double sum = train_frac + val_frac + test_frac;
  if (std::abs(sum - 1.0) > 1e-9)
    throw SplitError("split fractions must sum to 1");
}

namespace {

// Apportion n into three parts by largest remainder so the sizes differ
// from the exact fractions by less than one sample.
std::array<std::size_t, 3> apportion(std::size_t n, const SplitSpec& spec) {
  double fr[3] = {spec.train_frac, spec.val_frac, spec.test_frac};
  std::array<std::size_t, 3> out{};
  double rem[3];
  std::size_t used = 0;
  for (int p = 0; p < 3; ++p) {
    double exact = fr[p] * static_cast<double>(n);
    out[p] = static_cast<std::size_t>(std::floor(exact));
    rem[p] = exact - std::floor(exact);
    used += out[p];
  }
  // Hand surplus samples to the largest remainders; ties go to the earlier
  // partition so the result is deterministic.
  std::size_t leftover = n - used;
  std::array<int, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return rem[a] > rem[b]; });
  for (std::size_t i = 0; i < leftover; ++i) out[order[i % 3]] += 1;
  return out;
}

Dataset take_rows(const Dataset& ds, const std::vector<std::size_t>& idx) {
  const Matrix& x = ds.features();
  Matrix sub(idx.size(), x.cols());
  std::vector<int> labels(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t c = 0; c < x.cols(); ++c) sub(i, c) = x(idx[i], c);
    labels[i] = ds.labels()[idx[i]];
  }
  Dataset out(std::move(sub), std::move(labels), ds.k(), ds.feature_names());
  out.set_class_names(ds.class_names());
  out.set_standardization(ds.standardization());
  out.set_informative(ds.informative());
  return out;
}

}  // namespace

DataSplits split(const Dataset& ds, const SplitSpec& spec) {
  spec.validate();
  std::size_t n = ds.n_rows();
  if (n < 3) throw SplitError("need at least 3 rows to split");
  Rng rng(spec.seed);
  std::vector<std::vector<std::size_t>> parts(3);

  if (spec.stratified) {
    // Per class: shuffle its rows, apportion by largest remainder, then
    // repair so every partition keeps at least one sample.
    std::vector<std::vector<std::size_t>> by_class(ds.k());
    for (std::size_t r = 0; r < n; ++r)
      by_class[ds.labels()[r]].push_back(r);
    for (int c = 0; c < ds.k(); ++c) {
      if (by_class[c].size() < 3) {
        throw SplitError("class " + std::to_string(c) + " has " +
                         std::to_string(by_class[c].size()) +
                         " sample(s); stratified split needs at least 3");
      }
      rng.shuffle(by_class[c]);
      auto sizes = apportion(by_class[c].size(), spec);
      for (int p = 0; p < 3; ++p) {
        while (sizes[p] == 0) {
          int donor = 0;
          for (int q = 1; q < 3; ++q)
            if (sizes[q] > sizes[donor]) donor = q;
          sizes[donor] -= 1;
          sizes[p] += 1;
        }
      }
      std::size_t at = 0;
      for (int p = 0; p < 3; ++p)
        for (std::size_t i = 0; i < sizes[p]; ++i)
          parts[p].push_back(by_class[c][at++]);
    }
  } else {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    rng.shuffle(idx);
    auto sizes = apportion(n, spec);
    std::size_t at = 0;
    for (int p = 0; p < 3; ++p)
      for (std::size_t i = 0; i < sizes[p]; ++i) parts[p].push_back(idx[at++]);
  }

  for (auto& part : parts) std::sort(part.begin(), part.end());
  return {take_rows(ds, parts[0]), take_rows(ds, parts[1]),
          take_rows(ds, parts[2])};
}

Dataset apply_mask(const Dataset& ds, std::span<const std::uint8_t> mask) {
  if (mask.size() != ds.n_features())
    throw std::domain_error("mask length does not match feature count");
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < mask.size(); ++c)
    if (mask[c]) keep.push_back(c);
  if (keep.empty()) throw std::domain_error("mask selects no features");

  const Matrix& x = ds.features();
  Matrix sub(x.rows(), keep.size());
  std::vector<std::string> names;
  std::vector<ColumnStats> stats;
  for (std::size_t j = 0; j < keep.size(); ++j) {
    for (std::size_t r = 0; r < x.rows(); ++r) sub(r, j) = x(r, keep[j]);
    names.push_back(ds.feature_names()[keep[j]]);
    if (keep[j] < ds.standardization().size())
      stats.push_back(ds.standardization()[keep[j]]);
  }
  std::vector<int> informative;
  for (std::size_t j = 0; j < keep.size(); ++j) {
    for (int orig : ds.informative())
      if (static_cast<std::size_t>(orig) == keep[j])
        informative.push_back(static_cast<int>(j));
  }

  Dataset out(std::move(sub), ds.labels(), ds.k(), std::move(names));
  out.set_class_names(ds.class_names());
  out.set_standardization(std::move(stats));
  out.set_informative(std::move(informative));
  return out;
}

Dataset concat_rows(const Dataset& a, const Dataset& b) {
  if (a.n_features() != b.n_features() || a.k() != b.k() ||
      a.feature_names() != b.feature_names())
    throw std::invalid_argument("concat_rows: dataset schemas differ");
  const Matrix& xa = a.features();
  const Matrix& xb = b.features();
  Matrix x(xa.rows() + xb.rows(), xa.cols());
  std::vector<int> labels;
  labels.reserve(x.rows());
  for (std::size_t r = 0; r < xa.rows(); ++r) {
    for (std::size_t c = 0; c < xa.cols(); ++c) x(r, c) = xa(r, c);
    labels.push_back(a.labels()[r]);
  }
  for (std::size_t r = 0; r < xb.rows(); ++r) {
    for (std::size_t c = 0; c < xb.cols(); ++c) x(xa.rows() + r, c) = xb(r, c);
    labels.push_back(b.labels()[r]);
  }
  Dataset out(std::move(x), std::move(labels), a.k(), a.feature_names());
  out.set_class_names(a.class_names());
  out.set_standardization(a.standardization());
  out.set_informative(a.informative());
  return out;
}

Dataset synthesize(int n, int d_informative, int d_noise, int k,
                   std::uint64_t seed) {
  if (n < 3 * k || d_informative < 1 || d_noise < 0 || k < 2)
    throw std::invalid_argument("synthesize: bad shape arguments");

  int d = d_informative + d_noise;
  Rng rng(seed);

  // Class centers sit on signed unit patterns so every informative column
  // separates at least one pair of classes: coordinate j of class c takes
  // sign from bit (j mod ceil(log2 k)) of c. Center separation (>= m*sqrt2
  // after the 1/sqrt(d) scaling) dominates the within-class spread.
  int bits = 1;
  while ((1 << bits) < k) ++bits;
  const double magnitude = 2.0;
  const double spread = 0.7;
  double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d_informative));

  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i % k;
  std::vector<std::size_t> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);

  Matrix x(n, d);
  for (int row = 0; row < n; ++row) {
    int c = labels[order[row]];
    for (int j = 0; j < d_informative; ++j) {
      double sign = ((c >> (j % bits)) & 1) ? 1.0 : -1.0;
      x(row, j) = magnitude * sign * inv_sqrt_d + spread * rng.normal();
    }
    for (int j = d_informative; j < d; ++j) x(row, j) = rng.normal();
  }
  std::vector<int> shuffled_labels(n);
  for (int row = 0; row < n; ++row) shuffled_labels[row] = labels[order[row]];

  // Standardize like the CSV path so downstream code sees one convention.
  std::vector<ColumnStats> stats(d);
  for (int c = 0; c < d; ++c) {
    double mean = 0.0;
    for (int r = 0; r < n; ++r) mean += x(r, c);
    mean /= n;
    double var = 0.0;
    for (int r = 0; r < n; ++r) var += (x(r, c) - mean) * (x(r, c) - mean);
    var /= n;
    double sd = std::sqrt(var);
    if (sd <= 0.0) sd = 1.0;
    for (int r = 0; r < n; ++r) x(r, c) = (x(r, c) - mean) / sd;
    stats[c] = {mean, sd};
  }

  std::vector<std::string> names(d);
  for (int j = 0; j < d; ++j) names[j] = "f" + std::to_string(j);
  Dataset ds(std::move(x), std::move(shuffled_labels), k, std::move(names));
  std::vector<std::string> class_names(k);
  for (int c = 0; c < k; ++c) class_names[c] = "class" + std::to_string(c);
  ds.set_class_names(std::move(class_names));
  ds.set_standardization(std::move(stats));
  std::vector<int> informative(d_informative);
  for (int j = 0; j < d_informative; ++j) informative[j] = j;
  ds.set_informative(std::move(informative));
  return ds;
}

}  // namespace qibonn
