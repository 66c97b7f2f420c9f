#include "ltikit/dt.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ltikit/errors.hpp"

namespace ltikit {

DifferenceEquation::DifferenceEquation(std::vector<double> feedforward, std::vector<double> feedback)
    : b(std::move(feedforward)), a(std::move(feedback)) {
    if (b.empty()) b.push_back(0.0);
    if (a.empty() || a[0] == 0.0)
        throw ZeroLeadingFeedback("leading feedback coefficient a0 must be nonzero");
    if (a[0] != 1.0) {
        const double a0 = a[0];
        for (double& v : b) v /= a0;
        for (double& v : a) v /= a0;
        a[0] = 1.0;
    }
}

Sequence simulate(const DifferenceEquation& de, const Sequence& input, std::size_t n_out) {
    std::vector<double> y(n_out, 0.0);
    const auto& x = input.samples;
    for (std::size_t n = 0; n < n_out; ++n) {
        double acc = 0.0;
        for (std::size_t j = 0; j < de.b.size(); ++j) {
            if (j <= n && n - j < x.size()) acc += de.b[j] * x[n - j];
        }
        for (std::size_t k = 1; k < de.a.size(); ++k) {
            if (k <= n) acc -= de.a[k] * y[n - k];
        }
        y[n] = acc;
    }
    return Sequence(std::move(y), input.sample_rate, input.origin);
}

Sequence impulse_response_dt(const DifferenceEquation& de, std::size_t n) {
    if (n < 1) throw std::invalid_argument("impulse response needs n >= 1");
    return simulate(de, unit_impulse(n), n);
}

Sequence step_response_dt(const DifferenceEquation& de, std::size_t n) {
    if (n < 1) throw std::invalid_argument("step response needs n >= 1");
    return simulate(de, unit_step(n), n);
}

std::vector<Complex> geometric_mode(Complex c, Complex x0, std::size_t n) {
    if (n < 1) throw std::invalid_argument("geometric mode needs n >= 1");
    std::vector<Complex> x(n);
    x[0] = x0;
    for (std::size_t k = 1; k < n; ++k) x[k] = x[k - 1] * c;
    return x;
}

FilterKind classify(const DifferenceEquation& de) {
    for (std::size_t k = 1; k < de.a.size(); ++k)
        if (de.a[k] != 0.0) return FilterKind::iir;
    return FilterKind::fir;
}

Complex evaluate(const DifferenceEquation& de, const Complex& z) {
    const Complex w = 1.0 / z;
    auto horner = [&](const std::vector<double>& c) {
        Complex acc = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * w + *it;
        return acc;
    };
    return horner(de.b) / horner(de.a);
}

FrequencyResponse dt_freq_response(const DifferenceEquation& de, double fs,
                                   const std::vector<double>& f_grid) {
    if (!(fs > 0.0)) throw std::invalid_argument("sampling rate must be positive");
    const double ts = 1.0 / fs;
    bool out_of_band = false;
    std::vector<double> omega(f_grid.size());
    std::vector<Complex> values(f_grid.size());
    for (std::size_t k = 0; k < f_grid.size(); ++k) {
        const double f = f_grid[k];
        if (f < 0.0 || f > fs / 2.0) out_of_band = true;
        const double theta = -2.0 * std::numbers::pi * f * ts;
        const Complex w{std::cos(theta), std::sin(theta)};  // z^-1 on the unit circle
        auto horner = [&](const std::vector<double>& c) {
            Complex acc = 0.0;
            for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * w + *it;
            return acc;
        };
        const Complex den = horner(de.a);
        if (std::abs(den) < 1e-300)
            throw PoleOnGrid("pole on the unit circle at a requested grid frequency");
        values[k] = horner(de.b) / den;
        omega[k] = 2.0 * std::numbers::pi * f;
    }
    auto fr = make_frequency_response(std::move(omega), std::move(values));
    fr.out_of_band_warning = out_of_band;
    return fr;
}

RationalTF to_tf(const DifferenceEquation& de) {
    return RationalTF(Polynomial(de.b), Polynomial(de.a), Domain::dt_zinv);
}

DifferenceEquation to_difference_equation(const RationalTF& tf) {
    if (tf.domain != Domain::dt_zinv)
        throw DomainMismatch("difference equations are defined for DT transfer functions");
    if (tf.den.coeffs()[0] == 0.0)
        throw ZeroLeadingFeedback("DT transfer function has zero constant term in the denominator");
    return DifferenceEquation(tf.num.coeffs(), tf.den.coeffs());
}

}  // namespace ltikit
