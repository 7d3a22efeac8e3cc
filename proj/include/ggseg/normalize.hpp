#pragma once

#include <string>
#include <vector>

#include "ggseg/series.hpp"

namespace ggseg {

/// Per-channel shift/scale to mean 0, sample (n-1) standard deviation 1.
/// Channels with (numerically) zero variance are set to 0 everywhere and a
/// warning is appended to *warnings when given.
UniformSeries zscore(const UniformSeries& series,
                     std::vector<std::string>* warnings = nullptr);

/// Element-wise mean of the two z-scored single-channel inputs; the result
/// channel is named "fused". Inputs must share the sample rate and are
/// trimmed to the shorter length.
UniformSeries fuse_ground_truth(const UniformSeries& eda,
                                const UniformSeries& rating,
                                std::vector<std::string>* warnings = nullptr);

}  // namespace ggseg
