#pragma once

#include <vector>

#include "ltikit/frequency_response.hpp"
#include "ltikit/rational.hpp"
#include "ltikit/sequence.hpp"

namespace ltikit {

/// Recursive difference equation
///   a0*y[n] + a1*y[n-1] + ... = b0*x[n] + b1*x[n-1] + ...
/// normalized at construction so a[0] == 1.
struct DifferenceEquation {
    std::vector<double> b;  // feedforward taps, b[0] multiplies the current input
    std::vector<double> a;  // feedback taps, a[0] == 1 after normalization

    DifferenceEquation(std::vector<double> feedforward, std::vector<double> feedback);
};

enum class FilterKind { fir, iir };

/// Zero-state simulation; out-of-range input samples read as zero.
Sequence simulate(const DifferenceEquation& de, const Sequence& input, std::size_t n_out);

Sequence impulse_response_dt(const DifferenceEquation& de, std::size_t n);
Sequence step_response_dt(const DifferenceEquation& de, std::size_t n);

/// x[k] = x0 * c^k, built by repeated multiplication.
std::vector<Complex> geometric_mode(Complex c, Complex x0, std::size_t n);

FilterKind classify(const DifferenceEquation& de);

/// H evaluated at z = e^{i*2*pi*f*Ts} over the given grid of frequencies in Hz.
FrequencyResponse dt_freq_response(const DifferenceEquation& de, double fs,
                                   const std::vector<double>& f_grid);

/// Point evaluation of H(z) = b(z^-1)/a(z^-1).
Complex evaluate(const DifferenceEquation& de, const Complex& z);

RationalTF to_tf(const DifferenceEquation& de);
DifferenceEquation to_difference_equation(const RationalTF& tf);

}  // namespace ltikit
