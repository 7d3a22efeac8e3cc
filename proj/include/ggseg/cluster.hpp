#pragma once

#include <cstdint>
#include <vector>

#include "ggseg/covering.hpp"
#include "ggseg/ggs.hpp"
#include "ggseg/series.hpp"

namespace ggseg {

enum class FeatureMode {
  mean_only,        // row i = per-channel mean of segment i
  mean_plus_shape,  // mean plus the segment resampled to 16 points/channel
};

inline constexpr index_t kShapePoints = 16;

/// One feature row per segment of bps.
using SegmentFeatures = Eigen::MatrixXd;

struct ClusterConfig {
  int k = 3;
  std::uint64_t seed = 0;
  int max_iters = 100;
  int restarts = 8;
  FeatureMode feature_mode = FeatureMode::mean_only;
};

SegmentFeatures extract_features(const UniformSeries& series,
                                 const BreakpointSet& bps, FeatureMode mode);

/// k-means with k-means++ seeding, Euclidean distance, best WCSS over
/// config.restarts restarts. Deterministic given the seed. Labels are
/// canonicalized by ascending centroid coordinates (lexicographic), so
/// label 0 is the cluster with the smallest centroid.
std::vector<int> kmeans(const SegmentFeatures& features,
                        const ClusterConfig& config);

/// Keep breakpoint b_i iff the segments on its two sides carry different
/// labels.
BreakpointSet prune_breakpoints(const BreakpointSet& bps,
                                const std::vector<int>& labels);

/// extract_features -> kmeans -> prune_breakpoints; merged runs keep their
/// shared cluster label. The series passed here is the labeling source,
/// which need not be the series the breakpoints were found on.
Partition cluster_partition(const UniformSeries& labeling_series,
                            const BreakpointSet& bps,
                            const ClusterConfig& config);

}  // namespace ggseg
