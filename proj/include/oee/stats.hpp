#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "oee/common.hpp"

namespace oee::stats {

/// Absolute prediction errors of one model on the shared test set.
struct ErrorSample {
  std::string model_name;
  Vector abs_errors;
};

struct AnovaResult {
  double f_stat = 0.0;
  std::size_t df_between = 0;
  std::size_t df_within = 0;
  double p_value = 1.0;
};

struct TukeyPair {
  std::string model_a;
  std::string model_b;
  double mean_diff = 0.0;  // mean(a) - mean(b)
  double ci_low = 0.0;
  double ci_high = 0.0;
  bool significant = false;
};

struct TukeyResult {
  std::vector<TukeyPair> pairwise;
  /// Compact letter display: models sharing a letter are not significantly
  /// different.
  std::map<std::string, std::string> letter_groups;
};

struct DispersionResult {
  double w_stat = 0.0;
  double p_value = 1.0;
  std::size_t df_between = 0;
  std::size_t df_within = 0;
};

/// Mean absolute error. Lengths must match and be >= 1.
double mae(const Vector& y, const Vector& yhat);

/// Mean absolute percentage error over rows with y_i >= floor. Rows below
/// the floor are excluded and counted into *n_excluded when given; excluding
/// every row is a domain error.
double mape(const Vector& y, const Vector& yhat, double floor = 1.0,
            std::size_t* n_excluded = nullptr);

/// One-way ANOVA F test. Needs >= 2 groups with >= 2 values each. A fully
/// degenerate input (zero between- and within-variance) yields F = 0, p = 1.
AnovaResult anova_oneway(const std::vector<Vector>& groups);

/// Tukey HSD simultaneous pairwise comparisons plus compact letter display.
/// alpha must be 0.05 (the only tabulated level).
TukeyResult tukey_hsd(const std::vector<Vector>& groups,
                      const std::vector<std::string>& names,
                      double alpha = 0.05);

/// Brown-Forsythe equal-dispersion test: ANOVA on |x - group median|.
DispersionResult dispersion_test(const std::vector<Vector>& groups,
                                 double alpha = 0.05);

/// ln Gamma(x) for x > 0 (Lanczos approximation).
double log_gamma(double x);

/// Regularized incomplete beta function I_x(a, b).
double incomplete_beta(double a, double b, double x);

/// CDF of the F distribution with (df1, df2) degrees of freedom.
double f_cdf(double df1, double df2, double x);

/// Upper critical value of the studentized range at alpha = 0.05 for k
/// groups (2..10) and df >= 5 within-group degrees of freedom. Interpolated
/// in (k, 1/df) from the tabulated 5% points.
double studentized_range_q(double alpha, std::size_t k, double df);

}  // namespace oee::stats
