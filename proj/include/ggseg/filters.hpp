#pragma once

#include <vector>

#include "ggseg/series.hpp"

namespace ggseg {

struct FilterSpec {
  double cutoff_hz = 0.0;
  int order = 3;  // single-pass order; forward-backward doubles the rolloff
};

/// Zero-phase (forward-backward) Butterworth low-pass over every channel.
/// The cutoff is interpreted per single pass, so the -3 dB point of one
/// pass sits at cutoff_hz; the combined response is -6 dB there.
/// Errors: cutoff >= Nyquist -> invalid-filter; length < 3*order ->
/// series-too-short.
UniformSeries butterworth_lowpass(const UniformSeries& series,
                                  const FilterSpec& spec);

namespace detail {

// One second-order section, direct form II transposed. First-order
// sections set b2 = a2 = 0. Each section is normalized to unit DC gain.
struct Sos {
  double b0, b1, b2, a1, a2;
};

std::vector<Sos> design_butterworth_lowpass(int order, double cutoff_hz,
                                            double rate_hz);

/// scipy-style filtfilt: odd extension at both ends plus steady-state
/// initial conditions, forward pass then reverse pass.
void sosfiltfilt(const std::vector<Sos>& sections, std::vector<double>& x);

}  // namespace detail
}  // namespace ggseg
