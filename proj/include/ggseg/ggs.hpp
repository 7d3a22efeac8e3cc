#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ggseg/kernels/kernels.hpp"
#include "ggseg/series.hpp"

namespace ggseg {

using ObjectiveVariant = kernels::Objective;

/// Strictly increasing interior breakpoints of a series of length
/// series_len. Boundaries 0 and series_len are implicit, so K breakpoints
/// induce K+1 nonempty segments.
class BreakpointSet {
public:
  BreakpointSet(std::vector<index_t> breakpoints, index_t series_len);
  static BreakpointSet none(index_t series_len) { return {{}, series_len}; }

  const std::vector<index_t>& breakpoints() const { return breakpoints_; }
  index_t series_len() const { return series_len_; }
  index_t count() const { return static_cast<index_t>(breakpoints_.size()); }
  index_t segment_count() const { return count() + 1; }
  /// Half-open [start, end) bounds of every induced segment, in order.
  std::vector<std::pair<index_t, index_t>> segments() const;

private:
  std::vector<index_t> breakpoints_;
  index_t series_len_;
};

/// Gaussian statistics of one segment: mean, empirical covariance with
/// divisor w = end - start, and the regularized covariance
/// emp_cov + (lambda / w) I.
struct SegmentStats {
  index_t start = 0;
  index_t end = 0;
  Eigen::VectorXd mean;
  Eigen::MatrixXd emp_cov;
  Eigen::MatrixXd reg_cov;
};

struct GgsConfig {
  double lambda = 15.0;
  int max_breakpoints = 0;
  int adjust_max_passes = 10;
  index_t min_segment_len = 2;
  ObjectiveVariant objective_variant = ObjectiveVariant::paper;
};

/// Shortest segment for which the empirical covariance stays meaningful.
inline constexpr index_t kMinSegmentLen = 2;

SegmentStats segment_stats(const UniformSeries& series, index_t start,
                           index_t end, double lambda);

/// One summand of the segmentation objective:
///   -1/2 [ w logdet(R) - lambda tr(R^-1) ]        (paper variant)
///   -1/2 [ w logdet(R) - lambda tr(S R^-1) ]      (original_ggs variant)
/// with R = stats.reg_cov. A failed factorization is retried once with a
/// 1e-9 I jitter, then raises factorization-failed.
double segment_loglik_term(const SegmentStats& stats, double lambda,
                           ObjectiveVariant variant = ObjectiveVariant::paper);

/// Sum of segment_loglik_term over all segments induced by bps.
double total_objective(const UniformSeries& series, const BreakpointSet& bps,
                       double lambda,
                       ObjectiveVariant variant = ObjectiveVariant::paper);

struct SplitResult {
  index_t split = -1;
  double gain = 0.0;  // may be negative
};

/// Best single split of [start, end): the s maximizing
/// term(start, s) + term(s, end) - term(start, end) with both parts at
/// least min_segment_len long. Ties break toward the smallest s. Returns
/// nullopt when no feasible s exists.
std::optional<SplitResult> best_split(
    const UniformSeries& series, index_t start, index_t end, double lambda,
    index_t min_segment_len = kMinSegmentLen,
    ObjectiveVariant variant = ObjectiveVariant::paper);

/// Greedy Gaussian segmentation: repeatedly insert the split with the
/// largest positive gain, then cyclically re-optimize each breakpoint
/// between its neighbors until a fixed point (or the pass cap). Stops
/// early when no split improves the objective. When objective_trace is
/// given it receives the objective after the initial (unsplit) state and
/// after every insertion+adjustment round.
BreakpointSet ggs(const UniformSeries& series, const GgsConfig& config,
                  std::vector<double>* objective_trace = nullptr);

/// floor(rate_per_hour * duration_s / 3600), at least 1.
int max_breakpoints_for(double duration_s, double rate_per_hour);

}  // namespace ggseg
