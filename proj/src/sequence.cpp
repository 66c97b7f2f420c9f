#include "ltikit/sequence.hpp"

#include <cmath>
#include <stdexcept>

namespace ltikit {

Sequence::Sequence(std::vector<double> s, double fs, int n0)
    : samples(std::move(s)), sample_rate(fs), origin(n0) {
    if (!(fs > 0.0)) throw std::invalid_argument("sample rate must be positive");
    for (double v : samples) {
        if (!std::isfinite(v)) throw std::invalid_argument("sequence sample not finite");
    }
}

Sequence unit_impulse(std::size_t n, double fs) {
    std::vector<double> s(n, 0.0);
    if (n > 0) s[0] = 1.0;
    return Sequence(std::move(s), fs);
}

Sequence unit_step(std::size_t n, double fs) {
    return Sequence(std::vector<double>(n, 1.0), fs);
}

}  // namespace ltikit
