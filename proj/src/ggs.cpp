#include "ggseg/ggs.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <limits>

namespace ggseg {

namespace {

constexpr double kGainEps = 1e-9;  // numerical guard for "positive gain"

kernels::PrefixMoments centered_prefix(const UniformSeries& series) {
  // The Gaussian terms depend only on within-segment covariance, so the
  // prefix sums are built over globally centered data for conditioning.
  Eigen::MatrixXd centered = series.data();
  centered.rowwise() -= centered.colwise().mean();
  return kernels::build_prefix(centered.data(), centered.rows(),
                               static_cast<int>(centered.cols()));
}

}  // namespace

BreakpointSet::BreakpointSet(std::vector<index_t> breakpoints,
                             index_t series_len)
    : breakpoints_(std::move(breakpoints)), series_len_(series_len) {
  if (series_len_ < 1) {
    fail(Errc::invalid_argument, "series_len must be positive");
  }
  index_t prev = 0;
  for (index_t b : breakpoints_) {
    if (b <= prev || b >= series_len_) {
      fail(Errc::invalid_argument,
           "breakpoints must be strictly increasing interior indices");
    }
    prev = b;
  }
}

std::vector<std::pair<index_t, index_t>> BreakpointSet::segments() const {
  std::vector<std::pair<index_t, index_t>> out;
  out.reserve(breakpoints_.size() + 1);
  index_t start = 0;
  for (index_t b : breakpoints_) {
    out.emplace_back(start, b);
    start = b;
  }
  out.emplace_back(start, series_len_);
  return out;
}

SegmentStats segment_stats(const UniformSeries& series, index_t start,
                           index_t end, double lambda) {
  if (start < 0 || end > series.length() || start >= end) {
    fail(Errc::invalid_argument, "segment bounds out of range");
  }
  const index_t w = end - start;
  if (w < kMinSegmentLen) {
    fail(Errc::segment_too_short,
         "segment of length " + std::to_string(w) + " is shorter than " +
             std::to_string(kMinSegmentLen));
  }
  if (lambda < 0.0) {
    fail(Errc::invalid_argument, "lambda must be nonnegative");
  }
  const auto block = series.data().middleRows(start, w);
  SegmentStats st;
  st.start = start;
  st.end = end;
  st.mean = block.colwise().mean();
  Eigen::MatrixXd centered = block.rowwise() - st.mean.transpose();
  st.emp_cov = (centered.transpose() * centered) / static_cast<double>(w);
  st.reg_cov = st.emp_cov;
  st.reg_cov.diagonal().array() += lambda / static_cast<double>(w);
  return st;
}

double segment_loglik_term(const SegmentStats& stats, double lambda,
                           ObjectiveVariant variant) {
  const double w = static_cast<double>(stats.end - stats.start);
  const index_t c = stats.reg_cov.rows();

  Eigen::MatrixXd r = stats.reg_cov;
  Eigen::LLT<Eigen::MatrixXd> llt(r);
  if (llt.info() != Eigen::Success) {
    r.diagonal().array() += 1e-9;
    llt.compute(r);
    if (llt.info() != Eigen::Success) {
      fail(Errc::factorization_failed,
           "regularized covariance is not positive definite");
    }
  }
  const Eigen::MatrixXd l = llt.matrixL();
  double logdet = 0.0;
  for (index_t i = 0; i < c; ++i) logdet += std::log(l(i, i));
  logdet *= 2.0;

  double tr;
  if (variant == ObjectiveVariant::paper) {
    Eigen::MatrixXd linv =
        l.triangularView<Eigen::Lower>().solve(Eigen::MatrixXd::Identity(c, c));
    tr = linv.squaredNorm();
  } else {
    tr = llt.solve(stats.emp_cov).trace();
  }
  return -0.5 * (w * logdet - lambda * tr);
}

double total_objective(const UniformSeries& series, const BreakpointSet& bps,
                       double lambda, ObjectiveVariant variant) {
  if (bps.series_len() != series.length()) {
    fail(Errc::invalid_argument, "breakpoint set does not match series length");
  }
  double total = 0.0;
  for (auto [a, b] : bps.segments()) {
    total += segment_loglik_term(segment_stats(series, a, b, lambda), lambda,
                                 variant);
  }
  return total;
}

std::optional<SplitResult> best_split(const UniformSeries& series,
                                      index_t start, index_t end, double lambda,
                                      index_t min_segment_len,
                                      ObjectiveVariant variant) {
  if (start < 0 || end > series.length() || start >= end) {
    fail(Errc::invalid_argument, "segment bounds out of range");
  }
  if (end - start < 2 * min_segment_len) return std::nullopt;
  auto pm = centered_prefix(series);
  auto best = kernels::split_scan(pm, start, end, min_segment_len, lambda,
                                  variant);
  if (best.split < 0) return std::nullopt;
  double base = kernels::segment_term(pm, start, end, lambda, variant);
  return SplitResult{best.split, best.value - base};
}

namespace {

struct GgsEngine {
  const kernels::PrefixMoments pm;
  const GgsConfig& cfg;
  std::vector<index_t> bounds;  // 0, b_1, .., b_K, T

  GgsEngine(const UniformSeries& series, const GgsConfig& config)
      : pm(centered_prefix(series)), cfg(config) {
    bounds = {0, series.length()};
  }

  double term(index_t a, index_t b) const {
    double t = kernels::segment_term(pm, a, b, cfg.lambda,
                                     cfg.objective_variant);
    return t;
  }

  double objective() const {
    double total = 0.0;
    for (size_t i = 0; i + 1 < bounds.size(); ++i) {
      total += term(bounds[i], bounds[i + 1]);
    }
    return total;
  }

  // Largest-gain split across current segments; scanning is left to right
  // so equal gains resolve to the leftmost segment.
  bool insert_best() {
    double best_gain = 0.0;
    index_t best_pos = -1;
    for (size_t i = 0; i + 1 < bounds.size(); ++i) {
      auto bs = kernels::split_scan(pm, bounds[i], bounds[i + 1],
                                    cfg.min_segment_len, cfg.lambda,
                                    cfg.objective_variant);
      if (bs.split < 0) continue;
      double gain = bs.value - term(bounds[i], bounds[i + 1]);
      if (gain <= kGainEps || std::isnan(gain)) continue;
      if (best_pos < 0 || gain > best_gain) {
        best_gain = gain;
        best_pos = bs.split;
      }
    }
    if (best_pos < 0) return false;
    bounds.insert(std::upper_bound(bounds.begin(), bounds.end(), best_pos),
                  best_pos);
    return true;
  }

  // Cyclic single-breakpoint repositioning between fixed neighbors.
  void adjust() {
    if (bounds.size() < 3) return;
    for (int pass = 0; pass < cfg.adjust_max_passes; ++pass) {
      bool moved = false;
      for (size_t i = 1; i + 1 < bounds.size(); ++i) {
        const index_t lo = bounds[i - 1];
        const index_t hi = bounds[i + 1];
        const index_t cur = bounds[i];
        auto bs = kernels::split_scan(pm, lo, hi, cfg.min_segment_len,
                                      cfg.lambda, cfg.objective_variant);
        if (bs.split < 0 || bs.split == cur) continue;
        double current = term(lo, cur) + term(cur, hi);
        if (bs.value > current + kGainEps) {
          bounds[i] = bs.split;
          moved = true;
        }
      }
      if (!moved) break;
    }
  }
};

}  // namespace

BreakpointSet ggs(const UniformSeries& series, const GgsConfig& config,
                  std::vector<double>* objective_trace) {
  if (config.lambda < 0.0) {
    fail(Errc::invalid_argument, "lambda must be nonnegative");
  }
  if (config.min_segment_len < kMinSegmentLen) {
    fail(Errc::invalid_argument, "min_segment_len must be at least 2");
  }
  GgsEngine engine(series, config);
  if (objective_trace) {
    objective_trace->clear();
    objective_trace->push_back(engine.objective());
  }
  for (int iter = 0; iter < config.max_breakpoints; ++iter) {
    if (!engine.insert_best()) break;
    engine.adjust();
    if (objective_trace) objective_trace->push_back(engine.objective());
  }
  std::vector<index_t> bps(engine.bounds.begin() + 1, engine.bounds.end() - 1);
  return BreakpointSet(std::move(bps), series.length());
}

int max_breakpoints_for(double duration_s, double rate_per_hour) {
  if (!(duration_s > 0.0)) {
    fail(Errc::invalid_argument, "duration must be positive");
  }
  double raw = std::floor(rate_per_hour * duration_s / 3600.0 + 1e-9);
  return std::max(1, static_cast<int>(raw));
}

}  // namespace ggseg
