#include <cmath>
#include <map>

#include "metricide/stats.hpp"

namespace metricide::stats {

namespace {

// Sum over tie groups of t^3 - t.
double tie_term(std::span<const double> values) {
  std::map<double, std::size_t> groups;
  for (double v : values) ++groups[v];
  double s = 0.0;
  for (const auto& [v, t] : groups) {
    const double td = static_cast<double>(t);
    s += td * td * td - td;
  }
  return s;
}

// P(min(W+, W-) <= w) by walking all 2^n sign assignments of the given ranks.
// Ranks are half-integers at worst, so doubling them keeps sums exact.
double exact_p(std::span<const double> ranks, double w) {
  const std::size_t n = ranks.size();
  std::vector<long> doubled(n);
  long total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    doubled[i] = std::lround(2.0 * ranks[i]);
    total += doubled[i];
  }
  const long w2 = std::lround(2.0 * w);
  const std::uint64_t patterns = std::uint64_t{1} << n;
  std::uint64_t hits = 0;
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    long plus = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) plus += doubled[i];
    }
    if (std::min(plus, total - plus) <= w2) ++hits;
  }
  return std::min(1.0, static_cast<double>(hits) / static_cast<double>(patterns));
}

}  // namespace

WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b,
                                    ZeroHandling zeros, WilcoxonMethod method) {
  if (a.size() != b.size()) throw std::invalid_argument("wilcoxon: length mismatch");
  std::vector<double> diffs;
  std::size_t zero_count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    if (d == 0.0) {
      ++zero_count;
      if (zeros == ZeroHandling::drop) continue;
    }
    diffs.push_back(d);
  }

  WilcoxonResult r;
  if (zero_count == a.size()) {
    r.all_zero = true;
    r.p_value = 1.0;
    return r;
  }

  std::vector<double> abs_d(diffs.size());
  for (std::size_t i = 0; i < diffs.size(); ++i) abs_d[i] = std::abs(diffs[i]);
  const auto ranks = rank_with_ties(abs_d);

  std::vector<double> signed_ranks;  // ranks of non-zero differences
  std::vector<double> nonzero_abs;
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    if (diffs[i] > 0) r.w_plus += ranks[i];
    if (diffs[i] < 0) r.w_minus += ranks[i];
    if (diffs[i] != 0.0) {
      signed_ranks.push_back(ranks[i]);
      nonzero_abs.push_back(abs_d[i]);
    }
  }
  r.n = signed_ranks.size();
  r.w = std::min(r.w_plus, r.w_minus);

  const bool use_exact = method == WilcoxonMethod::exact ||
                         (method == WilcoxonMethod::automatic && r.n <= kWilcoxonExactLimit);
  if (use_exact) {
    if (r.n > 30) throw std::invalid_argument("wilcoxon: exact enumeration limited to n <= 30");
    r.exact = true;
    r.p_value = exact_p(signed_ranks, r.w);
    return r;
  }

  // Normal approximation; with Pratt handling the zero ranks shift the
  // mean and variance.
  const double nn = static_cast<double>(diffs.size());
  const double z0 = zeros == ZeroHandling::pratt ? static_cast<double>(zero_count) : 0.0;
  const double mean = (nn * (nn + 1.0) - z0 * (z0 + 1.0)) / 4.0;
  double var = (nn * (nn + 1.0) * (2.0 * nn + 1.0) - z0 * (z0 + 1.0) * (2.0 * z0 + 1.0)) / 24.0;
  var -= tie_term(abs_d) / 48.0;
  if (zeros == ZeroHandling::pratt && z0 > 0) {
    // the zero block is not a tie among signed ranks
    var += (z0 * z0 * z0 - z0) / 48.0;
  }
  if (var <= 0.0) {
    r.p_value = 1.0;
    return r;
  }
  const double z = std::max(0.0, std::abs(r.w - mean) - 0.5) / std::sqrt(var);
  r.p_value = normal_p(z);
  return r;
}

TestResult mann_whitney_u(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw UndefinedStatistic("mann_whitney_u: empty sample");
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  const auto ranks = rank_with_ties(pooled);
  double r1 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) r1 += ranks[i];
  const double n1 = static_cast<double>(a.size()), n2 = static_cast<double>(b.size());
  const double n = n1 + n2;
  TestResult out;
  out.statistic = r1 - n1 * (n1 + 1.0) / 2.0;
  const double mean = n1 * n2 / 2.0;
  const double var = n1 * n2 / 12.0 * ((n + 1.0) - tie_term(pooled) / (n * (n - 1.0)));
  if (var <= 0.0) {
    out.p_value = 1.0;
    return out;
  }
  const double z = std::max(0.0, std::abs(out.statistic - mean) - 0.5) / std::sqrt(var);
  out.p_value = normal_p(z);
  return out;
}

}  // namespace metricide::stats
