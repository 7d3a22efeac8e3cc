#include "ggseg/normalize.hpp"

#include <cmath>

#include "ggseg/kernels/kernels.hpp"

namespace ggseg {

UniformSeries zscore(const UniformSeries& series,
                     std::vector<std::string>* warnings) {
  Eigen::MatrixXd out = series.data();
  const index_t n = out.rows();
  for (index_t c = 0; c < out.cols(); ++c) {
    double* col = out.col(c).data();
    auto mv = kernels::mean_var(col, n, /*ddof=*/1);
    double sd = std::sqrt(mv.var);
    if (sd <= 1e-12 * std::max(1.0, std::abs(mv.mean))) {
      out.col(c).setZero();
      if (warnings) {
        warnings->push_back("channel '" +
                            series.channels()[static_cast<size_t>(c)].name +
                            "' has zero variance; normalized to all zeros");
      }
      continue;
    }
    kernels::axpb(col, n, 1.0 / sd, -mv.mean / sd);
  }
  return series.with_data(std::move(out));
}

UniformSeries fuse_ground_truth(const UniformSeries& eda,
                                const UniformSeries& rating,
                                std::vector<std::string>* warnings) {
  if (eda.channel_count() != 1 || rating.channel_count() != 1) {
    fail(Errc::incompatible_series,
         "ground-truth fusion expects single-channel inputs");
  }
  double r0 = eda.rate_hz(), r1 = rating.rate_hz();
  if (std::abs(r0 - r1) > 1e-9 * std::max(r0, r1)) {
    fail(Errc::incompatible_series,
         "fusion inputs have different rates: " + std::to_string(r0) + " vs " +
             std::to_string(r1));
  }
  index_t n = std::min(eda.length(), rating.length());
  if (n < 2) {
    fail(Errc::incompatible_series, "fusion inputs have no usable overlap");
  }
  UniformSeries a = zscore(eda.length() == n ? eda : eda.slice_rows(0, n),
                           warnings);
  UniformSeries b =
      zscore(rating.length() == n ? rating : rating.slice_rows(0, n), warnings);
  Eigen::MatrixXd fused = 0.5 * (a.data() + b.data());
  return UniformSeries({{"fused", ""}}, std::move(fused), r0,
                       eda.start_time_s());
}

}  // namespace ggseg
