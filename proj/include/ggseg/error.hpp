#pragma once

#include <stdexcept>
#include <string>

namespace ggseg {

enum class Errc {
  invalid_argument,
  invalid_filter,
  series_too_short,
  upsampling_not_supported,
  incompatible_series,
  segment_too_short,
  factorization_failed,
  invalid_k,
  incompatible_partitions,
  drive_too_short,
  missing_channel,
  ingestion,
  io,
  config,
};

const char* to_string(Errc code);

/// Library-wide exception carrying a machine-readable error code.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace ggseg
