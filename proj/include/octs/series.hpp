#pragma once

#include <string>
#include <vector>

#include "octs/calendar.hpp"
#include "octs/types.hpp"

namespace octs {

/// Ordered category scheme. `upper_bounds[j]` is the inclusive upper cutoff of
/// category j on the raw scale; the last category is unbounded above and its
/// stored bound is ignored. Codes run 0..max_code() in label order.
struct CategoryScheme {
  std::vector<std::string> labels;
  std::vector<double> upper_bounds;

  /// National AQI scheme: Good/Satisfactory/Moderate/Poor/Very Poor/Severe
  /// with cutoffs 50, 100, 200, 300, 400.
  static CategoryScheme india_aqi();
  /// Anonymous m+1-category scheme ("C0".."Cm") for simulated series.
  static CategoryScheme generic(int n_categories);

  int size() const { return static_cast<int>(labels.size()); }
  int max_code() const { return size() - 1; }

  /// Map a raw value to the first category whose cutoff bounds it.
  /// Cutoff values themselves belong to the lower category.
  int encode(double value) const;

  void validate() const;
};

/// Daily ordinal series: strictly increasing dates, one category code per
/// date. Calendar gaps are allowed; chain-based operations treat a gap as a
/// break rather than fabricating a transition across it.
struct OrdinalSeries {
  std::vector<Date> dates;
  std::vector<int> codes;
  CategoryScheme scheme;

  Index size() const { return static_cast<Index>(codes.size()); }
};

/// Validating constructor; throws std::invalid_argument on broken invariants.
OrdinalSeries make_series(std::vector<Date> dates, std::vector<int> codes,
                          CategoryScheme scheme);

/// Series with synthetic consecutive dates starting 2000-01-01 (simulations,
/// tests).
OrdinalSeries make_indexed_series(std::vector<int> codes, CategoryScheme scheme);

/// Positions i where dates[i+1] is not the next calendar day.
std::vector<Index> gap_positions(const OrdinalSeries& series);

/// Half-open index ranges [begin, end) of maximal runs of consecutive dates.
std::vector<std::pair<Index, Index>> contiguous_runs(const OrdinalSeries& series);

struct FrequencyTable {
  IntVector counts;      // per category code
  Vector proportions;    // counts / n
};

/// Counts sum to the series length; proportions to 1.
FrequencyTable frequency_distribution(const OrdinalSeries& series);

struct TransitionMatrix {
  Matrix probs;                    // row i: P(Y_t = j | Y_{t-lag} = i)
  IntVector row_counts;            // transitions observed from state i
  std::vector<bool> zero_support;  // true where a row has no observations
};

/// Empirical lag-step transition probabilities. Only pairs whose dates are
/// exactly `lag` days apart are counted; rows without support stay all-zero
/// and are flagged.
TransitionMatrix transition_matrix(const OrdinalSeries& series, int lag);

/// 12 x (m+1) matrix of day counts per (calendar month, category); when
/// `normalize`, each row is expressed as a percentage of that month's days.
Matrix month_category_intensity(const OrdinalSeries& series, bool normalize);

/// n x (m+1) cumulative count paths; row t holds #{s <= t : Y_s = j}. The
/// slope of a path estimates the marginal probability of its category.
Matrix rate_evolution(const OrdinalSeries& series);

}  // namespace octs
