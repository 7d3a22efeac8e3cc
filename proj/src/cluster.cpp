#include "ggseg/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "ggseg/kernels/kernels.hpp"

namespace ggseg {

namespace {

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Column-major distance table: column j holds squared distances of every
// point to centroid j.
void fill_distances(const SegmentFeatures& x, const Eigen::MatrixXd& centroids,
                    Eigen::MatrixXd& dists) {
  const index_t n = x.rows();
  const index_t d = x.cols();
  const index_t k = centroids.rows();
  dists.setZero(n, k);
  for (index_t j = 0; j < k; ++j) {
    double* col = dists.col(j).data();
    for (index_t f = 0; f < d; ++f) {
      kernels::accum_sq_dist(col, x.col(f).data(), n, centroids(j, f));
    }
  }
}

struct KmeansRun {
  std::vector<int> labels;
  Eigen::MatrixXd centroids;
  double wcss = std::numeric_limits<double>::infinity();
};

KmeansRun run_once(const SegmentFeatures& x, int k, int max_iters,
                   std::mt19937_64& rng) {
  const index_t n = x.rows();
  KmeansRun run;
  run.centroids.resize(k, x.cols());

  // k-means++ seeding.
  Eigen::VectorXd d2 = Eigen::VectorXd::Constant(n, std::numeric_limits<double>::infinity());
  index_t first = static_cast<index_t>(rng() % static_cast<std::uint64_t>(n));
  run.centroids.row(0) = x.row(first);
  for (int j = 1; j < k; ++j) {
    for (index_t i = 0; i < n; ++i) {
      double dist = (x.row(i) - run.centroids.row(j - 1)).squaredNorm();
      d2[i] = std::min(d2[i], dist);
    }
    double total = d2.sum();
    index_t pick = -1;
    if (total > 0.0) {
      double u = uniform01(rng) * total;
      double acc = 0.0;
      for (index_t i = 0; i < n; ++i) {
        acc += d2[i];
        if (u < acc) {
          pick = i;
          break;
        }
      }
      if (pick < 0) pick = n - 1;
    } else {
      // All points coincide with chosen centroids; take the next index.
      pick = static_cast<index_t>(j) % n;
    }
    run.centroids.row(j) = x.row(pick);
  }

  Eigen::MatrixXd dists;
  run.labels.assign(static_cast<size_t>(n), 0);
  std::vector<int> prev(static_cast<size_t>(n), -1);
  for (int it = 0; it < max_iters; ++it) {
    fill_distances(x, run.centroids, dists);
    kernels::argmin_columns(dists.data(), n, k, run.labels.data());
    if (run.labels == prev) break;
    prev = run.labels;

    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, x.cols());
    std::vector<index_t> counts(static_cast<size_t>(k), 0);
    for (index_t i = 0; i < n; ++i) {
      sums.row(run.labels[static_cast<size_t>(i)]) += x.row(i);
      ++counts[static_cast<size_t>(run.labels[static_cast<size_t>(i)])];
    }
    for (int j = 0; j < k; ++j) {
      if (counts[static_cast<size_t>(j)] > 0) {
        run.centroids.row(j) =
            sums.row(j) / static_cast<double>(counts[static_cast<size_t>(j)]);
      } else {
        // Empty cluster: seize the point farthest from its centroid.
        index_t far = 0;
        double far_d = -1.0;
        for (index_t i = 0; i < n; ++i) {
          double dist = dists(i, run.labels[static_cast<size_t>(i)]);
          if (dist > far_d) {
            far_d = dist;
            far = i;
          }
        }
        run.centroids.row(j) = x.row(far);
      }
    }
  }

  fill_distances(x, run.centroids, dists);
  kernels::argmin_columns(dists.data(), n, k, run.labels.data());
  run.wcss = 0.0;
  for (index_t i = 0; i < n; ++i) {
    run.wcss += dists(i, run.labels[static_cast<size_t>(i)]);
  }
  return run;
}

bool lex_less(const Eigen::MatrixXd& c, index_t a, index_t b) {
  for (index_t f = 0; f < c.cols(); ++f) {
    if (c(a, f) < c(b, f)) return true;
    if (c(a, f) > c(b, f)) return false;
  }
  return a < b;
}

}  // namespace

SegmentFeatures extract_features(const UniformSeries& series,
                                 const BreakpointSet& bps, FeatureMode mode) {
  if (bps.series_len() != series.length()) {
    fail(Errc::invalid_argument, "breakpoint set does not match series length");
  }
  const auto segs = bps.segments();
  const index_t c = series.channel_count();
  const index_t dim =
      mode == FeatureMode::mean_only ? c : c + c * kShapePoints;
  SegmentFeatures out(static_cast<index_t>(segs.size()), dim);
  const auto& data = series.data();
  for (size_t i = 0; i < segs.size(); ++i) {
    auto [a, b] = segs[i];
    const index_t w = b - a;
    const auto block = data.middleRows(a, w);
    out.block(static_cast<index_t>(i), 0, 1, c) = block.colwise().mean();
    if (mode == FeatureMode::mean_plus_shape) {
      for (index_t ch = 0; ch < c; ++ch) {
        for (index_t p = 0; p < kShapePoints; ++p) {
          double v;
          if (w == 1) {
            v = block(0, ch);
          } else {
            double pos = static_cast<double>(p) * static_cast<double>(w - 1) /
                         static_cast<double>(kShapePoints - 1);
            index_t i0 = std::min<index_t>(static_cast<index_t>(pos), w - 2);
            double frac = pos - static_cast<double>(i0);
            v = (1.0 - frac) * block(i0, ch) + frac * block(i0 + 1, ch);
          }
          out(static_cast<index_t>(i), c + ch * kShapePoints + p) = v;
        }
      }
    }
  }
  return out;
}

std::vector<int> kmeans(const SegmentFeatures& features,
                        const ClusterConfig& config) {
  const index_t n = features.rows();
  if (config.k < 1 || static_cast<index_t>(config.k) > n) {
    fail(Errc::invalid_k, "k = " + std::to_string(config.k) +
                              " is outside [1, " + std::to_string(n) + "]");
  }
  if (config.k == 1) return std::vector<int>(static_cast<size_t>(n), 0);

  std::mt19937_64 rng(config.seed);
  KmeansRun best;
  for (int r = 0; r < std::max(1, config.restarts); ++r) {
    KmeansRun run = run_once(features, config.k, config.max_iters, rng);
    if (run.wcss < best.wcss) best = std::move(run);
  }

  // Canonical relabeling by ascending centroid coordinates.
  std::vector<index_t> order(static_cast<size_t>(config.k));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](index_t a, index_t b) {
    return lex_less(best.centroids, a, b);
  });
  std::vector<int> remap(static_cast<size_t>(config.k));
  for (int pos = 0; pos < config.k; ++pos) {
    remap[static_cast<size_t>(order[static_cast<size_t>(pos)])] = pos;
  }
  for (int& l : best.labels) l = remap[static_cast<size_t>(l)];
  return best.labels;
}

BreakpointSet prune_breakpoints(const BreakpointSet& bps,
                                const std::vector<int>& labels) {
  if (static_cast<index_t>(labels.size()) != bps.segment_count()) {
    fail(Errc::invalid_argument,
         "need one label per segment (" + std::to_string(bps.segment_count()) +
             "), got " + std::to_string(labels.size()));
  }
  std::vector<index_t> kept;
  const auto& b = bps.breakpoints();
  for (size_t i = 0; i < b.size(); ++i) {
    if (labels[i] != labels[i + 1]) kept.push_back(b[i]);
  }
  return BreakpointSet(std::move(kept), bps.series_len());
}

Partition cluster_partition(const UniformSeries& labeling_series,
                            const BreakpointSet& bps,
                            const ClusterConfig& config) {
  SegmentFeatures features =
      extract_features(labeling_series, bps, config.feature_mode);
  std::vector<int> labels = kmeans(features, config);
  BreakpointSet pruned = prune_breakpoints(bps, labels);

  std::vector<int> run_labels;
  run_labels.reserve(static_cast<size_t>(pruned.segment_count()));
  size_t seg = 0;
  const auto segs = bps.segments();
  for (auto [a, b] : pruned.segments()) {
    // Labels are constant across each merged run; take the first member's.
    while (segs[seg].second <= a) ++seg;
    run_labels.push_back(labels[seg]);
    while (seg < segs.size() && segs[seg].second < b) ++seg;
  }
  return Partition::from_breakpoints(pruned, std::move(run_labels));
}

}  // namespace ggseg
