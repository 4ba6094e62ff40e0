#include <cmath>
#include <limits>

#include "metricide/stats.hpp"

namespace metricide::stats {

std::string_view icc_model_name(IccModel model) {
  switch (model) {
    case IccModel::one_way:
      return "one_way";
    case IccModel::two_way_single:
      return "two_way_single";
    case IccModel::two_way_average:
      return "two_way_average";
  }
  return "?";
}

AnovaTable anova(const std::vector<std::vector<double>>& ratings) {
  AnovaTable t;
  t.n = ratings.size();
  t.k = t.n == 0 ? 0 : ratings.front().size();
  for (const auto& row : ratings) {
    if (row.size() != t.k) throw std::invalid_argument("icc: incomplete rating matrix");
    for (double x : row) {
      if (!std::isfinite(x)) throw std::invalid_argument("icc: incomplete rating matrix");
    }
  }
  if (t.n < 2 || t.k < 2) throw UndefinedStatistic("icc: needs at least 2 items and 2 raters");

  const double n = static_cast<double>(t.n), k = static_cast<double>(t.k);
  std::vector<double> row_mean(t.n, 0.0), col_mean(t.k, 0.0);
  for (std::size_t i = 0; i < t.n; ++i) {
    for (std::size_t j = 0; j < t.k; ++j) {
      row_mean[i] += ratings[i][j];
      col_mean[j] += ratings[i][j];
    }
  }
  for (auto& m : row_mean) m /= k;
  for (auto& m : col_mean) m /= n;
  // Summed in the same order as the column means, so identical raters give
  // column means equal to the grand mean bit for bit.
  double grand = 0.0;
  for (double m : row_mean) grand += m;
  grand /= n;

  // Residual sums taken directly rather than by subtraction, so that perfect
  // agreement leaves them exactly zero.
  double ss_rows = 0.0, ss_cols = 0.0, ss_error = 0.0, ss_within = 0.0;
  for (double m : row_mean) ss_rows += k * (m - grand) * (m - grand);
  for (double m : col_mean) ss_cols += n * (m - grand) * (m - grand);
  for (std::size_t i = 0; i < t.n; ++i) {
    for (std::size_t j = 0; j < t.k; ++j) {
      const double e = ratings[i][j] - row_mean[i] - col_mean[j] + grand;
      const double w = ratings[i][j] - row_mean[i];
      ss_error += e * e;
      ss_within += w * w;
    }
  }

  t.ms_rows = ss_rows / (n - 1.0);
  t.ms_cols = ss_cols / (k - 1.0);
  t.ms_error = ss_error / ((n - 1.0) * (k - 1.0));
  t.ms_within = ss_within / (n * (k - 1.0));
  return t;
}

IccResult icc(const std::vector<std::vector<double>>& ratings, IccModel model) {
  const AnovaTable t = anova(ratings);
  const double n = static_cast<double>(t.n), k = static_cast<double>(t.k);
  IccResult r;
  r.model = model;
  r.items = t.n;
  r.raters = t.k;
  double numer = 0.0, denom = 0.0, residual = 0.0;
  switch (model) {
    case IccModel::one_way:
      numer = t.ms_rows - t.ms_within;
      denom = t.ms_rows + (k - 1.0) * t.ms_within;
      residual = t.ms_within;
      r.df2 = n * (k - 1.0);
      break;
    case IccModel::two_way_single:
      numer = t.ms_rows - t.ms_error;
      denom = t.ms_rows + (k - 1.0) * t.ms_error + k * (t.ms_cols - t.ms_error) / n;
      residual = t.ms_error;
      r.df2 = (n - 1.0) * (k - 1.0);
      break;
    case IccModel::two_way_average:
      numer = t.ms_rows - t.ms_error;
      denom = t.ms_rows + (t.ms_cols - t.ms_error) / n;
      residual = t.ms_error;
      r.df2 = (n - 1.0) * (k - 1.0);
      break;
  }
  if (denom == 0.0) throw UndefinedStatistic("icc: no variance in the ratings");
  r.icc = numer / denom;
  r.df1 = n - 1.0;
  if (residual > 0.0) {
    r.f = t.ms_rows / residual;
  } else {
    r.f = t.ms_rows > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  }
  r.p_value = fisher_f_upper(r.f, r.df1, r.df2);
  return r;
}

}  // namespace metricide::stats
