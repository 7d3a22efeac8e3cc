#pragma once

#include <cstdint>
#include <vector>

#include "ggseg/series.hpp"

namespace ggseg {

struct MaskSpec {
  double target_fraction = 0.0;     // in [0, 1]
  double max_patch_fraction = 0.01; // in (0, 1]
  std::uint64_t seed = 0;
};

/// Indices masked by random patches: each draw picks a uniform start and a
/// uniform length in [1, ceil(max_patch_fraction * T)], overlaps allowed,
/// and drawing stops with the first patch that pushes the union to at least
/// target_fraction * T. Deterministic given the seed.
std::vector<bool> draw_mask(index_t length, const MaskSpec& spec);

/// Replace masked samples with the last unmasked value; a masked prefix is
/// back-filled from the first unmasked value, and a fully-masked series
/// becomes a constant at the original first sample.
UniformSeries impute_masked(const UniformSeries& series,
                            const std::vector<bool>& masked);

/// draw_mask + impute_masked (the mask is shared across channels).
UniformSeries mask_and_impute(const UniformSeries& series,
                              const MaskSpec& spec);

}  // namespace ggseg
