#include "ggseg/masking.hpp"

#include <cmath>
#include <random>

namespace ggseg {

namespace {

// Unbiased-enough bounded draw that does not depend on distribution
// internals, so masks reproduce across standard libraries.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

}  // namespace

std::vector<bool> draw_mask(index_t length, const MaskSpec& spec) {
  if (spec.target_fraction < 0.0 || spec.target_fraction > 1.0) {
    fail(Errc::invalid_argument, "target_fraction must be in [0, 1]");
  }
  if (!(spec.max_patch_fraction > 0.0) || spec.max_patch_fraction > 1.0) {
    fail(Errc::invalid_argument, "max_patch_fraction must be in (0, 1]");
  }
  std::vector<bool> masked(static_cast<size_t>(length), false);
  const double target = spec.target_fraction * static_cast<double>(length);
  const index_t max_len = std::max<index_t>(
      1, static_cast<index_t>(
             std::ceil(spec.max_patch_fraction * static_cast<double>(length))));
  std::mt19937_64 rng(spec.seed);
  index_t count = 0;
  while (static_cast<double>(count) < target) {
    index_t start = static_cast<index_t>(
        bounded(rng, static_cast<std::uint64_t>(length)));
    index_t len = 1 + static_cast<index_t>(
                          bounded(rng, static_cast<std::uint64_t>(max_len)));
    index_t end = std::min(start + len, length);
    for (index_t i = start; i < end; ++i) {
      if (!masked[static_cast<size_t>(i)]) {
        masked[static_cast<size_t>(i)] = true;
        ++count;
      }
    }
  }
  return masked;
}

UniformSeries impute_masked(const UniformSeries& series,
                            const std::vector<bool>& masked) {
  if (static_cast<index_t>(masked.size()) != series.length()) {
    fail(Errc::invalid_argument, "mask length does not match series");
  }
  Eigen::MatrixXd out = series.data();
  const index_t n = out.rows();

  index_t first_unmasked = -1;
  for (index_t i = 0; i < n; ++i) {
    if (!masked[static_cast<size_t>(i)]) {
      first_unmasked = i;
      break;
    }
  }
  if (first_unmasked < 0) {
    // Everything masked: constant at the original first sample.
    for (index_t i = 1; i < n; ++i) out.row(i) = out.row(0);
    return series.with_data(std::move(out));
  }
  for (index_t i = 0; i < first_unmasked; ++i) out.row(i) = out.row(first_unmasked);
  for (index_t i = first_unmasked + 1; i < n; ++i) {
    if (masked[static_cast<size_t>(i)]) out.row(i) = out.row(i - 1);
  }
  return series.with_data(std::move(out));
}

UniformSeries mask_and_impute(const UniformSeries& series,
                              const MaskSpec& spec) {
  return impute_masked(series, draw_mask(series.length(), spec));
}

}  // namespace ggseg
