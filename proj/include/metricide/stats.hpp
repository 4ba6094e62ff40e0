#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace metricide::stats {

inline constexpr double kSignificance = 0.05;

/// Raised when a statistic is undefined for its input (constant samples,
/// too few observations, degenerate correlation matrix).
class UndefinedStatistic : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Ranks 1..n; tied values share the mean of the ranks they occupy.
std::vector<double> rank_with_ties(std::span<const double> values);

/// Throws UndefinedStatistic for a constant side or n < 2.
double pearson(std::span<const double> x, std::span<const double> y);

struct CorrelationResult {
  double rho = 0.0;
  std::size_t n = 0;
  double p_value = 1.0;
};

/// Pearson correlation of tie-averaged ranks with a two-sided Student-t
/// p-value (n - 2 df). Needs n >= 3 and neither side constant.
CorrelationResult spearman(std::span<const double> x, std::span<const double> y);

struct TestResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

// Two-sided tail probabilities.
double student_t_p(double t, double df);
double normal_p(double z);
double fisher_f_upper(double f, double df1, double df2);

/// Williams' t for the difference between r12 and r13, which share
/// variable 1; r23 is the correlation of the other two. df = n - 3.
TestResult williams_test(double r12, double r13, double r23, std::size_t n);

/// Fisher z comparison of correlations from two independent samples.
TestResult fisher_z_test(double r1, std::size_t n1, double r2, std::size_t n2);

enum class IccModel { one_way, two_way_single, two_way_average };

std::string_view icc_model_name(IccModel model);

struct IccResult {
  double icc = 0.0;
  IccModel model = IccModel::two_way_single;
  double f = 0.0;
  double df1 = 0.0;
  double df2 = 0.0;
  double p_value = 1.0;
  std::size_t items = 0;
  std::size_t raters = 0;
};

/// Mean squares of an items x raters layout.
struct AnovaTable {
  std::size_t n = 0;  // items
  std::size_t k = 0;  // raters
  double ms_rows = 0.0;
  double ms_cols = 0.0;
  double ms_error = 0.0;   // two-way residual
  double ms_within = 0.0;  // one-way, raters pooled with residual
};

/// ratings[i][j] = rater j's score of item i. Throws std::invalid_argument
/// for ragged or non-finite input, UndefinedStatistic when n < 2 or k < 2.
AnovaTable anova(const std::vector<std::vector<double>>& ratings);
IccResult icc(const std::vector<std::vector<double>>& ratings, IccModel model);

enum class ZeroHandling {
  drop,   // Wilcoxon: zero differences leave the sample
  pratt,  // zeros are ranked, then their ranks are discarded
};

enum class WilcoxonMethod { automatic, exact, normal };

/// Largest sample (after dropping zeros) for which `automatic` enumerates
/// every sign pattern.
inline constexpr std::size_t kWilcoxonExactLimit = 12;

struct WilcoxonResult {
  double w = 0.0;  // min(w_plus, w_minus)
  double w_plus = 0.0;
  double w_minus = 0.0;
  std::size_t n = 0;  // non-zero differences
  double p_value = 1.0;
  bool exact = false;
  bool all_zero = false;  // no signal; p fixed at 1
};

WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b,
                                    ZeroHandling zeros = ZeroHandling::drop,
                                    WilcoxonMethod method = WilcoxonMethod::automatic);

/// Two-sided Mann-Whitney U (normal approximation, tie and continuity
/// corrected). statistic is U for the first sample.
TestResult mann_whitney_u(std::span<const double> a, std::span<const double> b);

/// Version tag of the generator behind random_baseline.
inline constexpr std::string_view kRandomGenerator = "mt19937_64-u53/v1";

/// n uniform deviates in [0, 1) from mt19937_64, 53 bits per value.
std::vector<double> random_baseline(std::size_t n, std::uint64_t seed);

}  // namespace metricide::stats
