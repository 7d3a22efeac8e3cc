#include "ggseg/resample.hpp"

#include <cmath>

namespace ggseg {

UniformSeries decimate(const UniformSeries& series, double target_rate_hz) {
  const double rate = series.rate_hz();
  if (!(target_rate_hz > 0.0)) {
    fail(Errc::invalid_argument, "target rate must be positive");
  }
  if (target_rate_hz > rate * (1.0 + 1e-12)) {
    fail(Errc::upsampling_not_supported,
         "target rate " + std::to_string(target_rate_hz) +
             " Hz exceeds series rate " + std::to_string(rate) + " Hz");
  }

  const double ratio = rate / target_rate_hz;
  if (std::abs(ratio - 1.0) < 1e-12) {
    return series;
  }

  const index_t n = series.length();
  const index_t out_len = static_cast<index_t>(
      std::floor(static_cast<double>(n) * target_rate_hz / rate + 1e-9));
  if (out_len < 2) {
    fail(Errc::series_too_short,
         "decimation would leave fewer than 2 samples");
  }

  const auto& in = series.data();
  Eigen::MatrixXd out(out_len, in.cols());

  const double ratio_round = std::round(ratio);
  if (std::abs(ratio - ratio_round) < 1e-9) {
    const index_t r = static_cast<index_t>(ratio_round);
    for (index_t k = 0; k < out_len; ++k) out.row(k) = in.row(k * r);
  } else {
    for (index_t k = 0; k < out_len; ++k) {
      double pos = static_cast<double>(k) * ratio;
      index_t i0 = static_cast<index_t>(std::floor(pos));
      if (i0 > n - 2) i0 = n - 2;
      double frac = pos - static_cast<double>(i0);
      if (frac < 0.0) frac = 0.0;
      if (frac > 1.0) frac = 1.0;
      out.row(k) = (1.0 - frac) * in.row(i0) + frac * in.row(i0 + 1);
    }
  }
  return UniformSeries(series.channels(), std::move(out), target_rate_hz,
                       series.start_time_s());
}

}  // namespace ggseg
