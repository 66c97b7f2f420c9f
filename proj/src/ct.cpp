#include "ltikit/ct.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ltikit/errors.hpp"

namespace ltikit {

ImpulseResponseModel impulse_model(const PartialFractionExpansion& pfe) {
    if (!pfe.direct.is_zero())
        throw NonStrictlyProper("impulse model requires a strictly proper source (no direct term)");
    ImpulseResponseModel model;
    model.terms.reserve(pfe.terms.size());
    for (const auto& term : pfe.terms)
        model.terms.push_back({term.pole, term.multiplicity, term.coeffs});
    return model;
}

Complex evaluate_impulse_complex(const ImpulseResponseModel& model, double t) {
    if (model.causal && t < 0.0) return 0.0;  // u(0) = 1, right-continuous
    Complex acc = 0.0;
    for (const auto& term : model.terms) {
        Complex modal = 0.0;
        double tpow = 1.0;       // t^{k-1}
        double factorial = 1.0;  // (k-1)!
        for (int k = 1; k <= term.multiplicity; ++k) {
            modal += term.coeffs[static_cast<std::size_t>(k - 1)] * (tpow / factorial);
            tpow *= t;
            factorial *= static_cast<double>(k);
        }
        acc += modal * std::exp(term.pole * t);
    }
    return acc;
}

double evaluate_impulse_at(const ImpulseResponseModel& model, double t) {
    return evaluate_impulse_complex(model, t).real();
}

std::vector<double> evaluate_impulse(const ImpulseResponseModel& model,
                                     const std::vector<double>& t_grid) {
    std::vector<double> h(t_grid.size());
    for (std::size_t k = 0; k < t_grid.size(); ++k) {
        if (!std::isfinite(t_grid[k])) throw std::invalid_argument("time grid value not finite");
        h[k] = evaluate_impulse_at(model, t_grid[k]);
    }
    return h;
}

FrequencyResponse freq_response(const RationalTF& tf, const std::vector<double>& omega_grid) {
    if (tf.domain != Domain::ct_s)
        throw DomainMismatch("freq_response expects a CT transfer function");
    std::vector<Complex> values(omega_grid.size());
    for (std::size_t k = 0; k < omega_grid.size(); ++k) {
        const Complex s{0.0, omega_grid[k]};
        const Complex den = tf.den(s);
        if (std::abs(den) < 1e-300)
            throw PoleOnGrid("imaginary-axis pole coincides with a grid frequency");
        values[k] = tf.num(s) / den;
    }
    auto fr = make_frequency_response(std::vector<double>(omega_grid), std::move(values));
    fr.unstable_warning = stability(to_pzg(tf)) == Stability::unstable;
    return fr;
}

RationalTF lpf(double tau) {
    if (!(tau > 0.0)) throw NonPositive("low-pass time constant must be positive");
    return RationalTF(Polynomial{1.0}, Polynomial{1.0, tau}, Domain::ct_s);
}

RationalTF hpf(double tau) {
    if (!(tau > 0.0)) throw NonPositive("high-pass time constant must be positive");
    return RationalTF(Polynomial{0.0, tau}, Polynomial{1.0, tau}, Domain::ct_s);
}

FrequencyResponse with_delay(const FrequencyResponse& fr, double tau_d) {
    if (tau_d < 0.0) throw NonPositive("propagation delay must be non-negative");
    std::vector<Complex> values(fr.values.size());
    for (std::size_t k = 0; k < fr.values.size(); ++k) {
        const double theta = -fr.omega[k] * tau_d;
        values[k] = fr.values[k] * Complex{std::cos(theta), std::sin(theta)};
    }
    auto out = make_frequency_response(std::vector<double>(fr.omega), std::move(values));
    out.unstable_warning = fr.unstable_warning;
    out.out_of_band_warning = fr.out_of_band_warning;
    return out;
}

double transition_bandwidth(double t_trans) {
    if (!(t_trans > 0.0)) throw NonPositive("transition time must be positive");
    return 2.0 * std::numbers::pi * 0.35 / t_trans;
}

Sequence convolve_response(const ImpulseResponseModel& model, const Sequence& input) {
    if (!model.causal) throw std::invalid_argument("convolution requires a causal model");
    const double ts = input.ts();
    const std::size_t n = input.size();

    // h on the input grid, reused across output samples
    std::vector<double> h(n);
    for (std::size_t k = 0; k < n; ++k) h[k] = evaluate_impulse_at(model, static_cast<double>(k) * ts);

    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        // trapezoid over integrand g(k) = h((i-k)Ts) * x(k), k = 0..i
        double acc = 0.0;
        for (std::size_t k = 0; k <= i; ++k) {
            const double g = h[i - k] * input.samples[k];
            const bool endpoint = (k == 0 || k == i);
            acc += endpoint ? 0.5 * g : g;
        }
        y[i] = (i == 0) ? 0.0 : acc * ts;
    }
    return Sequence(std::move(y), input.sample_rate, input.origin);
}

}  // namespace ltikit
