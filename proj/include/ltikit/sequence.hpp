#pragma once

#include <vector>

namespace ltikit {

/// Uniformly sampled real signal. `origin` is the time index of samples[0],
/// so samples[i] sits at t = (origin + i) / sample_rate.
struct Sequence {
    std::vector<double> samples;
    double sample_rate = 1.0;
    int origin = 0;

    Sequence() = default;
    Sequence(std::vector<double> s, double fs, int n0 = 0);

    std::size_t size() const { return samples.size(); }
    double ts() const { return 1.0 / sample_rate; }
    double operator[](std::size_t i) const { return samples[i]; }
};

Sequence unit_impulse(std::size_t n, double fs = 1.0);
Sequence unit_step(std::size_t n, double fs = 1.0);

}  // namespace ltikit
