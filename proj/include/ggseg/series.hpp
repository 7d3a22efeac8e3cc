#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <vector>

#include "ggseg/error.hpp"

namespace ggseg {

using index_t = Eigen::Index;

struct ChannelInfo {
  std::string name;
  std::string unit;
};

/// Multichannel signal sampled at a fixed rate.
///
/// Data is a T x C matrix (column-major, one contiguous column per channel).
/// Values are immutable after construction; every transform in the library
/// returns a new series. Construction validates T >= 2, C >= 1, rate > 0,
/// finite values, and unique channel names.
class UniformSeries {
public:
  UniformSeries(std::vector<ChannelInfo> channels, Eigen::MatrixXd data,
                double rate_hz, double start_time_s = 0.0);

  /// Convenience constructor for a single-channel series.
  static UniformSeries single(std::string name, Eigen::VectorXd values,
                              double rate_hz, double start_time_s = 0.0,
                              std::string unit = "");

  index_t length() const { return data_.rows(); }
  index_t channel_count() const { return data_.cols(); }
  const Eigen::MatrixXd& data() const { return data_; }
  double rate_hz() const { return rate_hz_; }
  double start_time_s() const { return start_time_s_; }
  double duration_s() const {
    return static_cast<double>(length()) / rate_hz_;
  }
  /// Time of the first sample past the end, in seconds.
  double end_time_s() const { return start_time_s_ + duration_s(); }

  const std::vector<ChannelInfo>& channels() const { return channels_; }
  /// Index of the named channel, or -1 when absent.
  index_t channel_index(std::string_view name) const;
  bool has_channel(std::string_view name) const {
    return channel_index(name) >= 0;
  }
  Eigen::VectorXd channel_values(std::string_view name) const;

  /// Same metadata, new sample matrix (shape may differ).
  UniformSeries with_data(Eigen::MatrixXd data) const;
  /// Rows [begin, end); start time shifts accordingly.
  UniformSeries slice_rows(index_t begin, index_t end) const;
  /// Single-channel view of channel c as its own series.
  UniformSeries select_channel(index_t c) const;

private:
  std::vector<ChannelInfo> channels_;
  Eigen::MatrixXd data_;
  double rate_hz_;
  double start_time_s_;
};

}  // namespace ggseg
