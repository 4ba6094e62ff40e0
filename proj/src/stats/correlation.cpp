#include <cmath>

#include "metricide/stats.hpp"

namespace metricide::stats {

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("pearson: length mismatch");
  const std::size_t n = x.size();
  if (n < 2) throw UndefinedStatistic("pearson: fewer than 2 observations");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw UndefinedStatistic("correlation undefined for constant input");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

CorrelationResult spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("spearman: length mismatch");
  if (x.size() < 3) throw UndefinedStatistic("spearman: fewer than 3 observations");
  const auto rx = rank_with_ties(x);
  const auto ry = rank_with_ties(y);
  CorrelationResult r;
  r.n = x.size();
  r.rho = pearson(rx, ry);
  const double df = static_cast<double>(r.n) - 2.0;
  if (std::abs(r.rho) >= 1.0) {
    r.p_value = 0.0;
  } else {
    r.p_value = student_t_p(r.rho * std::sqrt(df / (1.0 - r.rho * r.rho)), df);
  }
  return r;
}

TestResult williams_test(double r12, double r13, double r23, std::size_t n) {
  for (double r : {r12, r13, r23}) {
    if (!(std::abs(r) <= 1.0)) throw std::invalid_argument("williams_test: |r| > 1");
  }
  if (n < 4) throw UndefinedStatistic("williams_test: n < 4");
  // Grouped so that swapping r12 and r13 gives bit-identical k.
  const double k = 1.0 - (r12 * r12 + r13 * r13) - r23 * r23 + 2.0 * (r12 * r13) * r23;
  if (k <= 0.0) throw UndefinedStatistic("williams_test: singular correlation matrix");
  const double nn = static_cast<double>(n);
  const double rbar = (r12 + r13) / 2.0;
  const double denom = 2.0 * k * (nn - 1.0) / (nn - 3.0) + rbar * rbar * std::pow(1.0 - r23, 3);
  TestResult out;
  out.statistic = (r12 - r13) * std::sqrt((nn - 1.0) * (1.0 + r23) / denom);
  out.p_value = student_t_p(out.statistic, nn - 3.0);
  return out;
}

TestResult fisher_z_test(double r1, std::size_t n1, double r2, std::size_t n2) {
  if (n1 < 4 || n2 < 4) throw UndefinedStatistic("fisher_z_test: each sample needs n >= 4");
  // Keep atanh finite for perfect correlations.
  constexpr double kLimit = 1.0 - 1e-12;
  const double z1 = std::atanh(std::clamp(r1, -kLimit, kLimit));
  const double z2 = std::atanh(std::clamp(r2, -kLimit, kLimit));
  const double se = std::sqrt(1.0 / (static_cast<double>(n1) - 3.0) +
                              1.0 / (static_cast<double>(n2) - 3.0));
  TestResult out;
  out.statistic = (z1 - z2) / se;
  out.p_value = normal_p(out.statistic);
  return out;
}

}  // namespace metricide::stats
