#include "ggseg/filters.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace ggseg {
namespace detail {

std::vector<Sos> design_butterworth_lowpass(int order, double cutoff_hz,
                                            double rate_hz) {
  const double warped = 2.0 * rate_hz * std::tan(M_PI * cutoff_hz / rate_hz);
  std::vector<Sos> sections;
  // Analog prototype poles sit on the left unit semicircle; scale by the
  // pre-warped cutoff and map through the bilinear transform. Zeros all
  // land at z = -1.
  const double fs2 = 2.0 * rate_hz;
  int k = 0;
  if (order % 2 == 1) {
    // Real pole at -warped.
    std::complex<double> p(-warped, 0.0);
    std::complex<double> z = (fs2 + p) / (fs2 - p);
    double a1 = -z.real();
    double g = (1.0 + a1) / 2.0;
    sections.push_back({g, g, 0.0, a1, 0.0});
    k = 1;
  }
  for (; k < order; k += 2) {
    double theta = M_PI * (2.0 * k + order + 1.0) / (2.0 * order);
    std::complex<double> p = warped * std::complex<double>(std::cos(theta),
                                                           std::sin(theta));
    std::complex<double> z = (fs2 + p) / (fs2 - p);
    double a1 = -2.0 * z.real();
    double a2 = std::norm(z);
    double g = (1.0 + a1 + a2) / 4.0;
    sections.push_back({g, 2.0 * g, g, a1, a2});
  }
  return sections;
}

namespace {

void sosfilt(const std::vector<Sos>& sections, std::vector<double>& x,
             double scale) {
  for (const Sos& s : sections) {
    // Steady-state conditions for a constant input; each section has unit
    // DC gain so every stage sees the same constant.
    double z1 = (1.0 - s.b0) * scale;
    double z2 = (s.b2 - s.a2) * scale;
    for (double& v : x) {
      double y = s.b0 * v + z1;
      z1 = s.b1 * v - s.a1 * y + z2;
      z2 = s.b2 * v - s.a2 * y;
      v = y;
    }
  }
}

}  // namespace

void sosfiltfilt(const std::vector<Sos>& sections, std::vector<double>& x) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
  const std::ptrdiff_t order = static_cast<std::ptrdiff_t>(sections.size()) * 2;
  std::ptrdiff_t edge = std::min<std::ptrdiff_t>(3 * (order + 1), n - 1);

  std::vector<double> ext;
  ext.reserve(x.size() + 2 * static_cast<size_t>(edge));
  for (std::ptrdiff_t i = edge; i >= 1; --i) ext.push_back(2.0 * x[0] - x[i]);
  ext.insert(ext.end(), x.begin(), x.end());
  for (std::ptrdiff_t i = 1; i <= edge; ++i)
    ext.push_back(2.0 * x[n - 1] - x[n - 1 - i]);

  sosfilt(sections, ext, ext.front());
  std::reverse(ext.begin(), ext.end());
  sosfilt(sections, ext, ext.front());
  std::reverse(ext.begin(), ext.end());

  std::copy(ext.begin() + edge, ext.begin() + edge + n, x.begin());
}

}  // namespace detail

UniformSeries butterworth_lowpass(const UniformSeries& series,
                                  const FilterSpec& spec) {
  if (spec.order < 1) {
    fail(Errc::invalid_filter, "filter order must be >= 1");
  }
  const double nyquist = series.rate_hz() / 2.0;
  if (!(spec.cutoff_hz > 0.0) || spec.cutoff_hz >= nyquist) {
    fail(Errc::invalid_filter,
         "cutoff " + std::to_string(spec.cutoff_hz) +
             " Hz must lie in (0, " + std::to_string(nyquist) + ") Hz");
  }
  if (series.length() < 3 * static_cast<index_t>(spec.order)) {
    fail(Errc::series_too_short,
         "series of length " + std::to_string(series.length()) +
             " is shorter than the filter warm-up of " +
             std::to_string(3 * spec.order) + " samples");
  }

  auto sections =
      detail::design_butterworth_lowpass(spec.order, spec.cutoff_hz,
                                         series.rate_hz());
  Eigen::MatrixXd out = series.data();
  std::vector<double> buf(static_cast<size_t>(out.rows()));
  for (index_t c = 0; c < out.cols(); ++c) {
    Eigen::VectorXd::Map(buf.data(), out.rows()) = out.col(c);
    detail::sosfiltfilt(sections, buf);
    out.col(c) = Eigen::VectorXd::Map(buf.data(), out.rows());
  }
  return series.with_data(std::move(out));
}

}  // namespace ggseg
