#pragma once

#include "ggseg/series.hpp"

namespace ggseg {

/// Downsample to target_rate_hz. Integer rate ratios keep every r-th
/// sample; non-integer ratios interpolate linearly onto the uniform target
/// grid. Output length is floor(T * target / rate). The caller is expected
/// to have low-pass filtered below the target Nyquist already.
UniformSeries decimate(const UniformSeries& series, double target_rate_hz);

}  // namespace ggseg
