#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "octs/series.hpp"
#include "octs/types.hpp"

namespace octs {

enum class Wave { Sin, Cos, AbsSin, AbsCos };

/// One trigonometric seasonal covariate: sin/cos (or their absolute values,
/// for non-negative seasonal effects) of 2*pi*k*t / period.
struct FourierTermSpec {
  double period = 7.0;
  Wave kind = Wave::Sin;
  int harmonic = 1;
};

double fourier_feature(double t, const FourierTermSpec& term);

/// Block indicators of the simulation designs: a 100-day cycle split into
/// days 1-30 (s1a), 31-70 (s1b) and 81-85 (s3), plus days 4-5 of each 5-day
/// cycle (s2). Defined for every integer t by periodic extension.
struct SimIndicators {
  double s1a, s1b, s2, s3;
};

SimIndicators sim_indicators(long t);

/// Calendar configuration behind the indicator covariates: season levels by
/// month, festival dates by year, weekend days. The season month mapping and
/// festival dates are data, not constants; the shipped default mapping
/// (Summer Mar-May, Monsoon Jun-Sep, Autumn Oct-Nov baseline, Winter Dec-Feb)
/// is overridable and festival dates must always be supplied by the caller.
struct SeasonCalendar {
  std::vector<std::string> season_names = {"Summer", "Monsoon", "Autumn", "Winter"};
  int baseline_season = 2;
  // month (1..12) -> season level; default per the shipped mapping
  std::array<int, 12> month_to_season = {3, 3, 0, 0, 0, 1, 1, 1, 1, 2, 2, 3};
  std::map<int, Date> festival_dates;  // year -> festival day
  int festival_window_days = 7;        // symmetric half-width (15-day window)
  std::set<int> weekend_weekdays = {0, 6};  // Sunday, Saturday

  int season_of(const Date& d) const { return month_to_season[d.month - 1]; }
  bool is_weekend(const Date& d) const { return weekend_weekdays.count(d.weekday()) > 0; }
  /// True iff d lies within festival_window_days of a configured festival.
  /// Throws (naming the year) when d's own year has no configured festival.
  bool in_festival_window(const Date& d) const;
};

struct SeasonTerm {
  int level = 0;  // non-baseline season level
};
struct WeekendTerm {};
struct FestivalWindowTerm {};
struct SimBlockTerm {
  int which = 0;  // 0=s1a, 1=s1b, 2=s2, 3=s3
};
struct LagTerm {
  int order = 1;  // lag covariate carries the raw integer code Y_{t-order}
};

using CovariateTerm = std::variant<FourierTermSpec, SeasonTerm, WeekendTerm,
                                   FestivalWindowTerm, SimBlockTerm, LagTerm>;

std::string term_name(const CovariateTerm& term, const std::vector<std::string>& season_names);

/// Ordered covariate list plus the calendar it is evaluated against. Column
/// order is part of any persisted model artifact.
struct CovariateSpec {
  std::vector<CovariateTerm> terms;
  SeasonCalendar calendar;

  int max_lag() const;
  Index n_columns() const { return static_cast<Index>(terms.size()); }
  std::vector<std::string> column_names() const;
  void validate() const;

  /// Weekly + yearly sin/cos pairs and a lag-1 term (the AQI default).
  static CovariateSpec tsolr_aqi(double weekly_period = 7.0, double yearly_period = 365.0);
  /// Season dummies (baseline excluded), festival window, weekend, lag 1.
  static CovariateSpec isolr_aqi(SeasonCalendar calendar);
  /// The simulation-design fourier set: sin/cos at periods 100 and 5 plus
  /// |sin|/|cos| at period 100, then lag 1.
  static CovariateSpec tsolr_sim();
  /// The simulation-design indicator set: s1a, s1b, s2, s3, lag 1.
  static CovariateSpec isolr_sim();
};

struct Design {
  Matrix X;
  std::vector<int> response;
  std::vector<std::string> column_names;
  Index first_position = 0;  // 0-based series position of the first row
};

/// Realize the design matrix and aligned response. Row r describes series
/// position first_position + r with time index t = position + 1; the first
/// max_lag positions are dropped. Deterministic given (series, spec).
Design build_design(const OrdinalSeries& series, const CovariateSpec& spec);

/// Single feature row for `position` (0-based). `position == series.size()`
/// is allowed and describes the day after the series ends (one-step-ahead
/// covariates with lags from the observed tail).
Vector feature_row(const OrdinalSeries& series, const CovariateSpec& spec, Index position);

namespace detail {
/// Shared term evaluation used by design building and the simulators.
/// `lag_code(k)` must return the category code k steps back.
template <typename LagFn>
double term_value(const CovariateTerm& term, long t, const Date& date,
                  const SeasonCalendar& cal, LagFn&& lag_code) {
  struct Visitor {
    long t;
    const Date& date;
    const SeasonCalendar& cal;
    LagFn& lag;
    double operator()(const FourierTermSpec& f) const {
      return fourier_feature(static_cast<double>(t), f);
    }
    double operator()(const SeasonTerm& s) const {
      return cal.season_of(date) == s.level ? 1.0 : 0.0;
    }
    double operator()(const WeekendTerm&) const { return cal.is_weekend(date) ? 1.0 : 0.0; }
    double operator()(const FestivalWindowTerm&) const {
      return cal.in_festival_window(date) ? 1.0 : 0.0;
    }
    double operator()(const SimBlockTerm& s) const {
      const SimIndicators ind = sim_indicators(t);
      switch (s.which) {
        case 0: return ind.s1a;
        case 1: return ind.s1b;
        case 2: return ind.s2;
        default: return ind.s3;
      }
    }
    double operator()(const LagTerm& l) const { return static_cast<double>(lag(l.order)); }
  };
  return std::visit(Visitor{t, date, cal, lag_code}, term);
}
}  // namespace detail

}  // namespace octs
