#include "ltikit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ltikit/errors.hpp"

namespace ltikit {

Complex z_transform_finite(const Sequence& x, const Complex& z) {
    if (x.size() == 0) return 0.0;
    if (z == Complex{0.0} && x.size() > 1)
        throw OriginEvaluation("finite Z-transform diverges at the origin");
    if (x.size() == 1) return Complex{x.samples[0], 0.0};
    const Complex zinv = 1.0 / z;
    Complex acc = 0.0;  // Horner in z^-1: sum_k x[k] z^-k
    for (auto it = x.samples.rbegin(); it != x.samples.rend(); ++it) acc = acc * zinv + *it;
    return acc;
}

Complex dtft_sample(const Sequence& x, double theta) {
    return z_transform_finite(x, Complex{std::cos(theta), std::sin(theta)});
}

Spectrum dft(const Sequence& x) {
    const std::size_t n = x.size();
    if (n < 1) throw std::invalid_argument("DFT needs at least one sample");
    Spectrum spec;
    spec.sample_rate = x.sample_rate;
    spec.bin_width = 2.0 * std::numbers::pi * x.sample_rate / static_cast<double>(n);
    spec.bins.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        spec.bins[k] = dtft_sample(x, theta);
    }
    return spec;
}

double leakage_ratio(const Sequence& x, std::size_t k0) {
    const std::size_t n = x.size();
    if (n < 4) throw std::invalid_argument("leakage ratio needs at least 4 samples");
    if (!(k0 > 0 && 2 * k0 < n)) throw BadBin("expected bin must satisfy 0 < k0 < N/2");

    double mean = 0.0;
    for (double v : x.samples) mean += v;
    mean /= static_cast<double>(n);

    const Spectrum spec = dft(x);
    double total = 0.0;
    for (const auto& b : spec.bins) total += std::norm(b);
    if (total == 0.0) return 0.0;

    double kept = std::norm(spec.bins[k0]) + std::norm(spec.bins[n - k0]);
    if (std::abs(mean) <= 1e-9) kept += std::norm(spec.bins[0]);
    return std::clamp(1.0 - kept / total, 0.0, 1.0);
}

}  // namespace ltikit
