#include "oee/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace oee::stats {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct GroupStats {
  std::vector<double> means;
  std::vector<std::size_t> sizes;
  double ss_between = 0.0;
  double ss_within = 0.0;
  std::size_t df_between = 0;
  std::size_t df_within = 0;
};

GroupStats group_stats(const std::vector<Vector>& groups) {
  if (groups.size() < 2) {
    throw DomainError("anova: need at least two groups");
  }
  GroupStats st;
  double grand_sum = 0.0;
  std::size_t n_total = 0;
  for (const auto& g : groups) {
    if (g.size() < 2) {
      throw DomainError("anova: every group needs at least two values");
    }
    const double sum = std::accumulate(g.begin(), g.end(), 0.0);
    st.means.push_back(sum / static_cast<double>(g.size()));
    st.sizes.push_back(g.size());
    grand_sum += sum;
    n_total += g.size();
  }
  const double grand_mean = grand_sum / static_cast<double>(n_total);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const double d = st.means[i] - grand_mean;
    st.ss_between += static_cast<double>(st.sizes[i]) * d * d;
    for (double x : groups[i]) {
      const double w = x - st.means[i];
      st.ss_within += w * w;
    }
  }
  st.df_between = groups.size() - 1;
  st.df_within = n_total - groups.size();
  return st;
}

AnovaResult anova_from_stats(const GroupStats& st) {
  AnovaResult res;
  res.df_between = st.df_between;
  res.df_within = st.df_within;
  if (st.ss_within == 0.0) {
    if (st.ss_between == 0.0) {
      res.f_stat = 0.0;
      res.p_value = 1.0;
    } else {
      res.f_stat = kInf;
      res.p_value = 0.0;
    }
    return res;
  }
  const double msb = st.ss_between / static_cast<double>(st.df_between);
  const double msw = st.ss_within / static_cast<double>(st.df_within);
  res.f_stat = msb / msw;
  res.p_value = 1.0 - f_cdf(static_cast<double>(st.df_between),
                            static_cast<double>(st.df_within), res.f_stat);
  return res;
}

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_cf(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 3e-14;
  constexpr double kFpMin = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kFpMin) d = kFpMin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((qap + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

double median_of(Vector values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

// Upper 5% points of the studentized range, k = 2..10 columns,
// df = {5, 10, 20, 30, 60, 120, inf} rows (Harter's tables).
constexpr double kQTableDf[] = {5.0, 10.0, 20.0, 30.0, 60.0, 120.0, kInf};
constexpr double kQTable[7][9] = {
    {3.635, 4.602, 5.218, 5.673, 6.033, 6.330, 6.582, 6.802, 6.995},
    {3.151, 3.877, 4.327, 4.654, 4.912, 5.124, 5.305, 5.461, 5.599},
    {2.950, 3.578, 3.958, 4.232, 4.445, 4.620, 4.768, 4.896, 5.008},
    {2.888, 3.486, 3.845, 4.102, 4.302, 4.464, 4.602, 4.720, 4.824},
    {2.829, 3.399, 3.737, 3.977, 4.163, 4.314, 4.441, 4.550, 4.646},
    {2.800, 3.356, 3.685, 3.917, 4.096, 4.241, 4.363, 4.468, 4.560},
    {2.7718, 3.314, 3.633, 3.858, 4.030, 4.170, 4.286, 4.387, 4.474},
};

}  // namespace

double mae(const Vector& y, const Vector& yhat) {
  if (y.empty()) throw DomainError("mae: empty input");
  if (y.size() != yhat.size()) throw DomainError("mae: length mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) sum += std::fabs(y[i] - yhat[i]);
  return sum / static_cast<double>(y.size());
}

double mape(const Vector& y, const Vector& yhat, double floor,
            std::size_t* n_excluded) {
  if (y.empty()) throw DomainError("mape: empty input");
  if (y.size() != yhat.size()) throw DomainError("mape: length mismatch");
  double sum = 0.0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] >= floor) {
      sum += std::fabs(y[i] - yhat[i]) / y[i];
      ++used;
    }
  }
  if (n_excluded != nullptr) *n_excluded = y.size() - used;
  if (used == 0) {
    throw DomainError("mape: every row fell below the floor");
  }
  return sum / static_cast<double>(used) * 100.0;
}

AnovaResult anova_oneway(const std::vector<Vector>& groups) {
  return anova_from_stats(group_stats(groups));
}

TukeyResult tukey_hsd(const std::vector<Vector>& groups,
                      const std::vector<std::string>& names, double alpha) {
  if (names.size() != groups.size()) {
    throw DomainError("tukey_hsd: one name per group required");
  }
  const GroupStats st = group_stats(groups);
  const std::size_t k = groups.size();
  const double msw = st.ss_within / static_cast<double>(st.df_within);
  const double q =
      studentized_range_q(alpha, k, static_cast<double>(st.df_within));

  TukeyResult res;
  std::vector<std::vector<bool>> significant(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      TukeyPair pair;
      pair.model_a = names[i];
      pair.model_b = names[j];
      pair.mean_diff = st.means[i] - st.means[j];
      const double half =
          q * std::sqrt(msw / 2.0 *
                        (1.0 / static_cast<double>(st.sizes[i]) +
                         1.0 / static_cast<double>(st.sizes[j])));
      pair.ci_low = pair.mean_diff - half;
      pair.ci_high = pair.mean_diff + half;
      pair.significant = pair.ci_low > 0.0 || pair.ci_high < 0.0;
      significant[i][j] = significant[j][i] = pair.significant;
      res.pairwise.push_back(std::move(pair));
    }
  }

  // Compact letter display: sort by mean ascending, then cover the sequence
  // with maximal runs free of significant pairs; each run gets one letter.
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return st.means[a] < st.means[b];
  });

  std::vector<std::string> letters(k);
  char letter = 'A';
  std::size_t last_end = 0;
  bool any_run = false;
  for (std::size_t s = 0; s < k; ++s) {
    std::size_t e = s;
    auto run_ok = [&](std::size_t upto) {
      for (std::size_t p = s; p <= upto; ++p) {
        for (std::size_t q2 = p + 1; q2 <= upto; ++q2) {
          if (significant[order[p]][order[q2]]) return false;
        }
      }
      return true;
    };
    while (e + 1 < k && run_ok(e + 1)) ++e;
    if (any_run && e <= last_end) continue;  // nested in the previous run
    for (std::size_t p = s; p <= e; ++p) letters[order[p]] += letter;
    ++letter;
    last_end = e;
    any_run = true;
  }
  for (std::size_t i = 0; i < k; ++i) res.letter_groups[names[i]] = letters[i];
  return res;
}

DispersionResult dispersion_test(const std::vector<Vector>& groups,
                                 double alpha) {
  if (alpha <= 0.0 || alpha >= 1.0) {
    throw DomainError("dispersion_test: alpha must be in (0, 1)");
  }
  std::vector<Vector> deviations;
  deviations.reserve(groups.size());
  for (const auto& g : groups) {
    if (g.size() < 2) {
      throw DomainError("dispersion_test: every group needs at least two values");
    }
    const double med = median_of(g);
    Vector z(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) z[i] = std::fabs(g[i] - med);
    deviations.push_back(std::move(z));
  }
  const AnovaResult a = anova_oneway(deviations);
  DispersionResult res;
  res.w_stat = a.f_stat;
  res.p_value = a.p_value;
  res.df_between = a.df_between;
  res.df_within = a.df_within;
  return res;
}

double log_gamma(double x) {
  if (x <= 0.0) throw DomainError("log_gamma: x must be > 0");
  // Lanczos approximation, g = 7, 9 coefficients.
  static const double cof[9] = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) {
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    return std::log(M_PI / std::sin(M_PI * x)) - log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double series = cof[0];
  for (int i = 1; i < 9; ++i) series += cof[i] / (z + i);
  const double t = z + 7.5;
  return 0.9189385332046727 + (z + 0.5) * std::log(t) - t + std::log(series);
}

double incomplete_beta(double a, double b, double x) {
  if (a <= 0.0 || b <= 0.0) {
    throw DomainError("incomplete_beta: a and b must be > 0");
  }
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_bt = log_gamma(a + b) - log_gamma(a) - log_gamma(b) +
                       a * std::log(x) + b * std::log(1.0 - x);
  const double bt = std::exp(ln_bt);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return bt * beta_cf(a, b, x) / a;
  }
  return 1.0 - bt * beta_cf(b, a, 1.0 - x) / b;
}

double f_cdf(double df1, double df2, double x) {
  if (df1 < 1.0 || df2 < 1.0) {
    throw DomainError("f_cdf: degrees of freedom must be >= 1");
  }
  if (x <= 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  const double u = df1 * x / (df1 * x + df2);
  return incomplete_beta(df1 / 2.0, df2 / 2.0, u);
}

double studentized_range_q(double alpha, std::size_t k, double df) {
  if (std::fabs(alpha - 0.05) > 1e-12) {
    throw DomainError("studentized_range_q: only alpha = 0.05 is tabulated");
  }
  if (k < 2 || k > 10) {
    throw DomainError("studentized_range_q: k must be in [2, 10]");
  }
  if (df < 5.0) {
    throw DomainError("studentized_range_q: df must be >= 5");
  }
  const std::size_t col = k - 2;
  // Linear interpolation in 1/df; the table is dense enough for 5e-3.
  const double inv = std::isinf(df) ? 0.0 : 1.0 / df;
  std::size_t row_hi = 0;  // larger 1/df (smaller df)
  for (std::size_t r = 0; r + 1 < 7; ++r) {
    const double inv_r = kQTableDf[r + 1] == kInf ? 0.0 : 1.0 / kQTableDf[r + 1];
    if (inv >= inv_r) {
      row_hi = r;
      break;
    }
    row_hi = r + 1;
  }
  if (row_hi == 6) return kQTable[6][col];
  const double inv_a = 1.0 / kQTableDf[row_hi];
  const double inv_b =
      kQTableDf[row_hi + 1] == kInf ? 0.0 : 1.0 / kQTableDf[row_hi + 1];
  const double t = (inv_a - inv) / (inv_a - inv_b);
  return kQTable[row_hi][col] * (1.0 - t) + kQTable[row_hi + 1][col] * t;
}

}  // namespace oee::stats
