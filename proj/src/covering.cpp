#include "ggseg/covering.hpp"

#include <algorithm>

namespace ggseg {

double jaccard(Interval a, Interval b) {
  const index_t inter =
      std::max<index_t>(0, std::min(a.hi, b.hi) - std::max(a.lo, b.lo));
  const index_t uni = a.length() + b.length() - inter;
  if (uni <= 0) return 0.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

Partition::Partition(std::vector<Interval> intervals, index_t series_len,
                     std::optional<std::vector<int>> labels)
    : intervals_(std::move(intervals)),
      labels_(std::move(labels)),
      series_len_(series_len) {
  if (intervals_.empty()) {
    fail(Errc::invalid_argument, "partition needs at least one interval");
  }
  index_t expect = 0;
  for (const Interval& iv : intervals_) {
    if (iv.lo != expect || iv.hi <= iv.lo) {
      fail(Errc::invalid_argument,
           "intervals must be nonempty, contiguous, and ordered");
    }
    expect = iv.hi;
  }
  if (expect != series_len_) {
    fail(Errc::invalid_argument, "intervals do not tile [0, series_len)");
  }
  if (labels_ && labels_->size() != intervals_.size()) {
    fail(Errc::invalid_argument, "label count does not match intervals");
  }
}

Partition Partition::from_breakpoints(const BreakpointSet& bps,
                                      std::optional<std::vector<int>> labels) {
  std::vector<Interval> ivs;
  ivs.reserve(static_cast<size_t>(bps.segment_count()));
  for (auto [a, b] : bps.segments()) ivs.push_back({a, b});
  return Partition(std::move(ivs), bps.series_len(), std::move(labels));
}

Partition Partition::whole(index_t series_len) {
  return Partition({{0, series_len}}, series_len);
}

BreakpointSet Partition::to_breakpoints() const {
  std::vector<index_t> bps;
  for (size_t i = 0; i + 1 < intervals_.size(); ++i) {
    bps.push_back(intervals_[i].hi);
  }
  return BreakpointSet(std::move(bps), series_len_);
}

CoverScore covering(const Partition& gt, const Partition& proposal,
                    CoverMaxScope scope) {
  if (gt.series_len() != proposal.series_len()) {
    fail(Errc::incompatible_partitions,
         "partitions cover different series lengths");
  }
  const double t = static_cast<double>(gt.series_len());
  CoverScore score;
  score.per_segment.reserve(gt.intervals().size());
  for (const Interval& a : gt.intervals()) {
    double best = 0.0;
    if (scope == CoverMaxScope::segments) {
      for (const Interval& b : proposal.intervals()) {
        best = std::max(best, jaccard(a, b));
      }
    } else {
      const auto& ivs = proposal.intervals();
      for (size_t i = 0; i < ivs.size(); ++i) {
        for (size_t j = i; j < ivs.size(); ++j) {
          best = std::max(best, jaccard(a, {ivs[i].lo, ivs[j].hi}));
        }
      }
    }
    double weight = static_cast<double>(a.length()) / t;
    score.per_segment.push_back({a, best, weight});
    score.value += weight * best;
  }
  return score;
}

double baseline_covering(const Partition& gt) {
  return covering(gt, Partition::whole(gt.series_len())).value;
}

}  // namespace ggseg
