#pragma once

#include <optional>
#include <vector>

#include "ggseg/ggs.hpp"
#include "ggseg/series.hpp"

namespace ggseg {

struct Interval {
  index_t lo = 0;
  index_t hi = 0;  // half-open
  index_t length() const { return hi - lo; }
};

/// |a intersect b| / |a union b| on half-open integer index intervals.
double jaccard(Interval a, Interval b);

/// Contiguous tiling of [0, series_len) with optional per-interval cluster
/// labels. The covering metric compares two of these.
class Partition {
public:
  Partition(std::vector<Interval> intervals, index_t series_len,
            std::optional<std::vector<int>> labels = std::nullopt);
  static Partition from_breakpoints(const BreakpointSet& bps,
                                    std::optional<std::vector<int>> labels =
                                        std::nullopt);
  static Partition whole(index_t series_len);

  const std::vector<Interval>& intervals() const { return intervals_; }
  const std::optional<std::vector<int>>& labels() const { return labels_; }
  index_t series_len() const { return series_len_; }
  index_t size() const { return static_cast<index_t>(intervals_.size()); }
  BreakpointSet to_breakpoints() const;

private:
  std::vector<Interval> intervals_;
  std::optional<std::vector<int>> labels_;
  index_t series_len_;
};

enum class CoverMaxScope {
  segments,           // max over the proposal's own intervals
  derived_intervals,  // max over unions of consecutive proposal intervals
};

struct SegmentCover {
  Interval gt;
  double best_jaccard = 0.0;
  double weight = 0.0;  // |gt| / T
};

struct CoverScore {
  double value = 0.0;
  std::vector<SegmentCover> per_segment;
};

/// Covering of gt by proposal: the length-weighted sum over ground-truth
/// intervals of the best Jaccard overlap among the proposal's intervals
/// (or, under derived_intervals, among every union of consecutive
/// proposal intervals).
CoverScore covering(const Partition& gt, const Partition& proposal,
                    CoverMaxScope scope = CoverMaxScope::segments);

/// Covering of gt by the single-interval proposal spanning the series.
double baseline_covering(const Partition& gt);

}  // namespace ggseg
