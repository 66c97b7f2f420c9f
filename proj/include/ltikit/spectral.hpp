#pragma once

#include <vector>

#include "ltikit/polynomial.hpp"
#include "ltikit/sequence.hpp"

namespace ltikit {

/// Unnormalized DFT bins X[k] of a length-N sequence; bin_width is the
/// spectral resolution 2*pi*Fs/N in rad/s.
struct Spectrum {
    std::vector<Complex> bins;
    double sample_rate = 1.0;
    double bin_width = 0.0;
};

/// Unilateral Z-transform of a finite sequence: sum_k x[k] * z^-k.
Complex z_transform_finite(const Sequence& x, const Complex& z);

/// Z-transform restricted to the unit circle at angle theta (rad/sample).
Complex dtft_sample(const Sequence& x, double theta);

/// Direct O(N^2) DFT; bin k samples the DTFT at theta = 2*pi*k/N.
Spectrum dft(const Sequence& x);

/// Fraction of spectral energy outside the expected tone bins {k0, N-k0}.
/// The DC bin joins the excluded set only when the input is zero-mean.
double leakage_ratio(const Sequence& x, std::size_t k0);

}  // namespace ltikit
