#include "ltikit/frequency_response.hpp"

#include <cmath>
#include <numbers>

namespace ltikit {

std::vector<double> unwrap_phase(const std::vector<Complex>& values) {
    std::vector<double> phase(values.size(), 0.0);
    double correction = 0.0;
    double previous = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) {
        const double raw = std::arg(values[k]);
        if (k > 0) {
            double jump = raw - previous;
            while (jump > std::numbers::pi) {
                correction -= 2.0 * std::numbers::pi;
                jump -= 2.0 * std::numbers::pi;
            }
            while (jump < -std::numbers::pi) {
                correction += 2.0 * std::numbers::pi;
                jump += 2.0 * std::numbers::pi;
            }
        }
        previous = raw;
        phase[k] = raw + correction;
    }
    return phase;
}

FrequencyResponse make_frequency_response(std::vector<double> omega, std::vector<Complex> values) {
    FrequencyResponse fr;
    fr.magnitude_db.resize(values.size());
    for (std::size_t k = 0; k < values.size(); ++k)
        fr.magnitude_db[k] = 20.0 * std::log10(std::abs(values[k]));
    fr.phase_rad = unwrap_phase(values);
    fr.omega = std::move(omega);
    fr.values = std::move(values);
    return fr;
}

}  // namespace ltikit
