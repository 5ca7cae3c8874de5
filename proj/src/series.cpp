#include "octs/series.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace octs {

CategoryScheme CategoryScheme::india_aqi() {
  CategoryScheme s;
  s.labels = {"Good", "Satisfactory", "Moderate", "Poor", "Very Poor", "Severe"};
  s.upper_bounds = {50, 100, 200, 300, 400,
                    std::numeric_limits<double>::infinity()};
  return s;
}

CategoryScheme CategoryScheme::generic(int n_categories) {
  if (n_categories < 2)
    throw std::invalid_argument("scheme needs at least 2 categories");
  CategoryScheme s;
  for (int j = 0; j < n_categories; ++j) {
    s.labels.push_back("C" + std::to_string(j));
    s.upper_bounds.push_back(j + 1 == n_categories
                                 ? std::numeric_limits<double>::infinity()
                                 : static_cast<double>(j));
  }
  return s;
}

int CategoryScheme::encode(double value) const {
  if (!std::isfinite(value) || value < 0)
    throw std::invalid_argument("raw value must be finite and >= 0");
  for (int j = 0; j + 1 < size(); ++j)
    if (value <= upper_bounds[j]) return j;
  return max_code();
}

void CategoryScheme::validate() const {
  if (labels.size() < 2) throw std::invalid_argument("scheme needs at least 2 categories");
  if (labels.size() != upper_bounds.size())
    throw std::invalid_argument("scheme labels/bounds size mismatch");
  for (std::size_t j = 0; j + 2 < labels.size(); ++j)
    if (!(upper_bounds[j] < upper_bounds[j + 1]))
      throw std::invalid_argument("scheme cutoffs must be strictly increasing");
}

OrdinalSeries make_series(std::vector<Date> dates, std::vector<int> codes,
                          CategoryScheme scheme) {
  scheme.validate();
  if (codes.empty()) throw std::invalid_argument("series must be non-empty");
  if (dates.size() != codes.size())
    throw std::invalid_argument("series dates/codes size mismatch");
  for (std::size_t i = 0; i + 1 < dates.size(); ++i)
    if (!(dates[i] < dates[i + 1]))
      throw std::invalid_argument("series dates must be strictly increasing (row " +
                                  std::to_string(i + 1) + ")");
  for (std::size_t i = 0; i < codes.size(); ++i)
    if (codes[i] < 0 || codes[i] > scheme.max_code())
      throw std::invalid_argument("category code out of range at row " + std::to_string(i));
  return OrdinalSeries{std::move(dates), std::move(codes), std::move(scheme)};
}

OrdinalSeries make_indexed_series(std::vector<int> codes, CategoryScheme scheme) {
  const Date origin{2000, 1, 1};
  std::vector<Date> dates;
  dates.reserve(codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i)
    dates.push_back(origin.plus_days(static_cast<long>(i)));
  return make_series(std::move(dates), std::move(codes), std::move(scheme));
}

std::vector<Index> gap_positions(const OrdinalSeries& series) {
  std::vector<Index> gaps;
  for (Index i = 0; i + 1 < series.size(); ++i)
    if (series.dates[i + 1] - series.dates[i] != 1) gaps.push_back(i);
  return gaps;
}

std::vector<std::pair<Index, Index>> contiguous_runs(const OrdinalSeries& series) {
  std::vector<std::pair<Index, Index>> runs;
  Index begin = 0;
  for (Index i = 0; i + 1 < series.size(); ++i) {
    if (series.dates[i + 1] - series.dates[i] != 1) {
      runs.emplace_back(begin, i + 1);
      begin = i + 1;
    }
  }
  runs.emplace_back(begin, series.size());
  return runs;
}

FrequencyTable frequency_distribution(const OrdinalSeries& series) {
  const int m1 = series.scheme.size();
  FrequencyTable out;
  out.counts = IntVector::Zero(m1);
  for (int c : series.codes) out.counts[c] += 1;
  out.proportions = out.counts.cast<double>() / static_cast<double>(series.size());
  return out;
}

TransitionMatrix transition_matrix(const OrdinalSeries& series, int lag) {
  if (lag < 1) throw std::invalid_argument("transition lag must be >= 1");
  if (series.size() <= lag)
    throw std::invalid_argument("series shorter than transition lag");
  const int m1 = series.scheme.size();
  TransitionMatrix out;
  out.probs = Matrix::Zero(m1, m1);
  out.row_counts = IntVector::Zero(m1);
  for (Index t = lag; t < series.size(); ++t) {
    if (series.dates[t] - series.dates[t - lag] != lag) continue;  // gap breaks the chain
    out.probs(series.codes[t - lag], series.codes[t]) += 1.0;
    out.row_counts[series.codes[t - lag]] += 1;
  }
  out.zero_support.resize(m1);
  for (int i = 0; i < m1; ++i) {
    out.zero_support[i] = out.row_counts[i] == 0;
    if (out.row_counts[i] > 0) out.probs.row(i) /= static_cast<double>(out.row_counts[i]);
  }
  return out;
}

Matrix month_category_intensity(const OrdinalSeries& series, bool normalize) {
  const int m1 = series.scheme.size();
  Matrix counts = Matrix::Zero(12, m1);
  for (Index t = 0; t < series.size(); ++t)
    counts(series.dates[t].month - 1, series.codes[t]) += 1.0;
  if (!normalize) return counts;
  for (int month = 0; month < 12; ++month) {
    const double days = counts.row(month).sum();
    if (days > 0) counts.row(month) *= 100.0 / days;
  }
  return counts;
}

Matrix rate_evolution(const OrdinalSeries& series) {
  const int m1 = series.scheme.size();
  Matrix path = Matrix::Zero(series.size(), m1);
  Vector running = Vector::Zero(m1);
  for (Index t = 0; t < series.size(); ++t) {
    running[series.codes[t]] += 1.0;
    path.row(t) = running.transpose();
  }
  return path;
}

}  // namespace octs
