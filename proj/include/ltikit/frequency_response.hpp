#pragma once

#include <vector>

#include "ltikit/polynomial.hpp"

namespace ltikit {

/// Sampled frequency response H(i*omega) (CT) or H(e^{i*omega*Ts}) (DT),
/// with magnitude in dB and unwrapped phase derived from the raw values.
struct FrequencyResponse {
    std::vector<double> omega;     // rad/s
    std::vector<Complex> values;
    std::vector<double> magnitude_db;
    std::vector<double> phase_rad;  // unwrapped
    bool unstable_warning = false;
    bool out_of_band_warning = false;
};

/// Builds the derived views; magnitude_db[k] = 20*log10(|values[k]|) and the
/// phase is unwrapped by +-2*pi whenever consecutive samples jump by more
/// than pi.
FrequencyResponse make_frequency_response(std::vector<double> omega, std::vector<Complex> values);

std::vector<double> unwrap_phase(const std::vector<Complex>& values);

}  // namespace ltikit
