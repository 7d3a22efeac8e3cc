#include "ggseg/series.hpp"

#include <unordered_set>
#include <utility>

namespace ggseg {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::invalid_filter: return "invalid-filter";
    case Errc::series_too_short: return "series-too-short";
    case Errc::upsampling_not_supported: return "upsampling-not-supported";
    case Errc::incompatible_series: return "incompatible-series";
    case Errc::segment_too_short: return "segment-too-short";
    case Errc::factorization_failed: return "factorization-failed";
    case Errc::invalid_k: return "invalid-k";
    case Errc::incompatible_partitions: return "incompatible-partitions";
    case Errc::drive_too_short: return "drive-too-short";
    case Errc::missing_channel: return "missing-channel";
    case Errc::ingestion: return "ingestion";
    case Errc::io: return "io";
    case Errc::config: return "config";
  }
  return "unknown";
}

UniformSeries::UniformSeries(std::vector<ChannelInfo> channels,
                             Eigen::MatrixXd data, double rate_hz,
                             double start_time_s)
    : channels_(std::move(channels)),
      data_(std::move(data)),
      rate_hz_(rate_hz),
      start_time_s_(start_time_s) {
  if (data_.rows() < 2) {
    fail(Errc::series_too_short,
         "series needs at least 2 samples, got " + std::to_string(data_.rows()));
  }
  if (data_.cols() < 1) {
    fail(Errc::invalid_argument, "series needs at least one channel");
  }
  if (static_cast<index_t>(channels_.size()) != data_.cols()) {
    fail(Errc::invalid_argument,
         "channel descriptor count does not match data columns");
  }
  if (!(rate_hz_ > 0.0)) {
    fail(Errc::invalid_argument, "rate_hz must be positive");
  }
  if (!data_.allFinite()) {
    fail(Errc::invalid_argument, "series contains non-finite values");
  }
  std::unordered_set<std::string> seen;
  for (const auto& ch : channels_) {
    if (!seen.insert(ch.name).second) {
      fail(Errc::invalid_argument, "duplicate channel name: " + ch.name);
    }
  }
}

UniformSeries UniformSeries::single(std::string name, Eigen::VectorXd values,
                                    double rate_hz, double start_time_s,
                                    std::string unit) {
  std::vector<ChannelInfo> chans{{std::move(name), std::move(unit)}};
  Eigen::MatrixXd data(values.size(), 1);
  data.col(0) = values;
  return UniformSeries(std::move(chans), std::move(data), rate_hz, start_time_s);
}

index_t UniformSeries::channel_index(std::string_view name) const {
  for (index_t i = 0; i < static_cast<index_t>(channels_.size()); ++i) {
    if (channels_[static_cast<size_t>(i)].name == name) return i;
  }
  return -1;
}

Eigen::VectorXd UniformSeries::channel_values(std::string_view name) const {
  index_t i = channel_index(name);
  if (i < 0) {
    fail(Errc::missing_channel, "no channel named " + std::string(name));
  }
  return data_.col(i);
}

UniformSeries UniformSeries::with_data(Eigen::MatrixXd data) const {
  return UniformSeries(channels_, std::move(data), rate_hz_, start_time_s_);
}

UniformSeries UniformSeries::slice_rows(index_t begin, index_t end) const {
  if (begin < 0 || end > length() || begin >= end) {
    fail(Errc::invalid_argument, "bad slice range");
  }
  Eigen::MatrixXd block = data_.middleRows(begin, end - begin);
  return UniformSeries(channels_, std::move(block), rate_hz_,
                       start_time_s_ + static_cast<double>(begin) / rate_hz_);
}

UniformSeries UniformSeries::select_channel(index_t c) const {
  if (c < 0 || c >= channel_count()) {
    fail(Errc::invalid_argument, "channel index out of range");
  }
  Eigen::MatrixXd col = data_.col(c);
  return UniformSeries({channels_[static_cast<size_t>(c)]}, std::move(col),
                       rate_hz_, start_time_s_);
}

}  // namespace ggseg
