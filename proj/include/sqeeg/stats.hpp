#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqeeg/execution.hpp"
#include "sqeeg/types.hpp"

namespace sqeeg::stats {

enum class Method {
  MannWhitneyExact,
  MannWhitneyNormal,
  ChiSquare,
  Permutation,
  Pearson,
  PartialCorrelation,
  Sobel,
};

std::string_view to_string(Method m);

struct StatResult {
  double statistic = 0.0;
  double p_value = 1.0;  // in (0, 1]
  Method method = Method::Permutation;
  std::optional<double> corrected_p;
  std::optional<bool> reject;
};

/// Largest combined size that takes the exact enumeration path.
inline constexpr std::size_t kMannWhitneyExactLimit = 12;

/// U of sample a (count of pairs with a > b, ties counting one half) and a
/// two-sided p.
StatResult mann_whitney_u(std::span<const double> a, std::span<const double> b);

using Table2x2 = std::array<std::array<double, 2>, 2>;

/// Pearson chi-square with one degree of freedom.
StatResult chi_square_independence(const Table2x2& table, bool yates = false);

/// Two-sided difference-of-means permutation test,
/// p = (1 + #{|T_perm| >= |T_obs|}) / (r + 1).
StatResult permutation_test(std::span<const double> a, std::span<const double> b, std::size_t r,
                            std::uint64_t seed);

struct FdrEntry {
  bool reject = false;
  double adjusted_p = 1.0;
};

/// Benjamini-Hochberg step-up procedure.
std::vector<FdrEntry> fdr_bh(std::span<const double> p_values, double alpha = 0.05);

/// Rejections of p <= alpha / m.
std::vector<bool> bonferroni(std::span<const double> p_values, double alpha = 0.05);

StatResult pearson_correlation(std::span<const double> x, std::span<const double> y);

/// Correlation of the residuals of x and y after least squares on
/// [1, covariates...]; each covariate is a column of length n.
StatResult partial_correlation(std::span<const double> x, std::span<const double> y,
                               std::span<const Series> covariates);

StatResult sobel_test(double a, double se_a, double b, double se_b);

/// "(z = 0.945, p = 0.345)"
std::string format_sobel(const StatResult& r);

/// "0.989" style p rendering: three decimals, "<0.001" below that.
std::string format_p(double p);

struct ScreenResult {
  std::vector<StatResult> tests;  // one per feature, corrected_p and reject filled
  std::vector<bool> mask;
};

/// Permutation test per feature column followed by BH-FDR. Feature f uses
/// seed derive_seed(seed, f).
ScreenResult groupwise_feature_screen(std::span<const Series> subjects, std::span<const Group> groups,
                                      std::size_t r = 1000, double alpha = 0.05, std::uint64_t seed = 0,
                                      Execution exec = Execution::Parallel);

/// CSV rows "feature,statistic,p_value,adjusted_p,reject".
std::string render_screen_csv(std::span<const std::string> names, const ScreenResult& screen);

struct MedianIqr {
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
};

/// Quartiles by linear interpolation between order statistics.
MedianIqr median_iqr(std::span<const double> x);

}  // namespace sqeeg::stats
