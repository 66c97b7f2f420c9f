#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ltikit/dt.hpp"
#include "ltikit/errors.hpp"
#include "support.hpp"

using namespace ltikit;

TEST_CASE("simulate basic systems") {
    // discrete doublet
    const DifferenceEquation doublet({1.0, -1.0}, {1.0});
    const auto d = simulate(doublet, unit_impulse(5), 5);
    CHECK(d.samples == std::vector<double>{1.0, -1.0, 0.0, 0.0, 0.0});

    // accumulator turns an impulse into a step
    const DifferenceEquation accumulator({1.0}, {1.0, -1.0});
    const auto s = simulate(accumulator, unit_impulse(4), 4);
    CHECK(s.samples == std::vector<double>{1.0, 1.0, 1.0, 1.0});

    // identity
    const DifferenceEquation identity({1.0}, {1.0});
    const Sequence input({0.3, -0.7, 2.0}, 1.0);
    CHECK(simulate(identity, input, 3).samples == input.samples);

    CHECK_THROWS_AS(DifferenceEquation({1.0}, {0.0, 1.0}), ZeroLeadingFeedback);
}

TEST_CASE("coefficient normalization divides a0 through") {
    const DifferenceEquation de({2.0, 4.0}, {2.0, -1.0});
    CHECK(de.a[0] == 1.0);
    CHECK(de.a[1] == doctest::Approx(-0.5));
    CHECK(de.b == std::vector<double>{1.0, 2.0});
}

TEST_CASE("impulse responses") {
    const DifferenceEquation one_pole({1.0}, {1.0, -0.5});
    CHECK(impulse_response_dt(one_pole, 4).samples == std::vector<double>{1.0, 0.5, 0.25, 0.125});

    const DifferenceEquation nyquist({1.0}, {1.0, 1.0});
    CHECK(impulse_response_dt(nyquist, 4).samples == std::vector<double>{1.0, -1.0, 1.0, -1.0});

    const DifferenceEquation fir({1.0, 1.0}, {1.0});
    CHECK(impulse_response_dt(fir, 4).samples == std::vector<double>{1.0, 1.0, 0.0, 0.0});
}

TEST_CASE("step responses") {
    const DifferenceEquation accumulator({1.0}, {1.0, -1.0});
    CHECK(step_response_dt(accumulator, 4).samples == std::vector<double>{1.0, 2.0, 3.0, 4.0});

    const DifferenceEquation differentiator({1.0, -1.0}, {1.0});
    CHECK(step_response_dt(differentiator, 3).samples == std::vector<double>{1.0, 0.0, 0.0});

    const DifferenceEquation moving_sum({1.0, 1.0}, {1.0});
    CHECK(step_response_dt(moving_sum, 4).samples == std::vector<double>{1.0, 2.0, 2.0, 2.0});
}

TEST_CASE("step response equals the running sum of the impulse response") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const auto de = testing::random_stable_dt_de(rng);
        const auto h = impulse_response_dt(de, 64);
        const auto s = step_response_dt(de, 64);
        double acc = 0.0;
        for (std::size_t n = 0; n < 64; ++n) {
            acc += h.samples[n];
            CHECK(s.samples[n] == doctest::Approx(acc).epsilon(1e-12));
        }
    }
}

TEST_CASE("geometric modes") {
    const auto ones = geometric_mode(1.0, 1.0, 5);
    for (const auto& v : ones) CHECK(v == Complex{1.0, 0.0});

    // 8 samples per turn for a phase increment of pi/4
    const Complex c = std::polar(1.0, std::numbers::pi / 4.0);
    const auto turn = geometric_mode(c, 1.0, 9);
    CHECK(std::abs(turn[8] - turn[0]) < 1e-12);
    CHECK(std::arg(turn[1]) == doctest::Approx(std::numbers::pi / 4.0));

    const auto halves = geometric_mode(0.5, 2.0, 4);
    CHECK(halves[0].real() == 2.0);
    CHECK(halves[1].real() == 1.0);
    CHECK(halves[2].real() == 0.5);
    CHECK(halves[3].real() == 0.25);

    // polar magnitude follows rho^k under a complex base
    const Complex damped = std::polar(0.9, 0.7);
    const auto mode = geometric_mode(damped, 1.0, 16);
    for (std::size_t k = 0; k < mode.size(); ++k)
        CHECK(std::abs(mode[k]) == doctest::Approx(std::pow(0.9, static_cast<double>(k))).epsilon(1e-12));
}

TEST_CASE("classification") {
    CHECK(classify(DifferenceEquation({1.0, -1.0}, {1.0})) == FilterKind::fir);
    CHECK(classify(DifferenceEquation({1.0}, {1.0, -0.6})) == FilterKind::iir);
    CHECK(classify(DifferenceEquation({1.0, 1.0}, {2.0})) == FilterKind::fir);
}

TEST_CASE("DT frequency responses of the canonical systems") {
    const double fs = 1.0;
    const DifferenceEquation differentiator({1.0, -1.0}, {1.0});
    auto fr = dt_freq_response(differentiator, fs, {fs / 2.0});
    CHECK(std::abs(fr.values[0]) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fr.magnitude_db[0] == doctest::Approx(20.0 * std::log10(2.0)).epsilon(1e-12));

    const DifferenceEquation moving_sum({1.0, 1.0}, {1.0});
    fr = dt_freq_response(moving_sum, fs, {0.0});
    CHECK(std::abs(fr.values[0]) == doctest::Approx(2.0).epsilon(1e-15));
    fr = dt_freq_response(moving_sum, fs, {fs / 2.0});
    CHECK(std::abs(fr.values[0]) < 1e-15);

    const DifferenceEquation accumulator({1.0}, {1.0, -1.0});
    fr = dt_freq_response(accumulator, fs, {fs / 2.0});
    CHECK(std::abs(fr.values[0]) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(dt_freq_response(accumulator, fs, {0.0}), PoleOnGrid);

    CHECK(dt_freq_response(differentiator, fs, {0.8}).out_of_band_warning);
    CHECK_FALSE(dt_freq_response(differentiator, fs, {0.3}).out_of_band_warning);
}

TEST_CASE("point evaluation at z") {
    const DifferenceEquation moving_sum({1.0, 1.0}, {1.0});
    CHECK(evaluate(moving_sum, Complex{-1.0, 0.0}) == Complex{0.0, 0.0});
    const DifferenceEquation differentiator({1.0, -1.0}, {1.0});
    CHECK(evaluate(differentiator, Complex{1.0, 0.0}) == Complex{0.0, 0.0});
    CHECK(std::abs(evaluate(differentiator, Complex{-1.0, 0.0})) == 2.0);
}

TEST_CASE("simulation equals convolution with the impulse response") {
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);

    auto convolve = [](const std::vector<double>& h, const std::vector<double>& x, std::size_t n) {
        std::vector<double> y(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k <= i && k < h.size(); ++k)
                if (i - k < x.size()) y[i] += h[k] * x[i - k];
        return y;
    };

    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> x(48);
        for (double& v : x) v = amp(rng);
        const Sequence input(x, 1.0);

        // FIR: exact equality
        const DifferenceEquation fir({amp(rng), amp(rng), amp(rng)}, {1.0});
        const auto h_fir = impulse_response_dt(fir, 48);
        const auto direct = simulate(fir, input, 48);
        const auto conv = convolve(h_fir.samples, x, 48);
        for (std::size_t n = 0; n < 48; ++n) CHECK(direct.samples[n] == conv[n]);

        // stable IIR: equality after truncating the impulse response at 1e-12
        const auto iir = testing::random_stable_dt_de(rng);
        auto h = impulse_response_dt(iir, 4096).samples;
        std::size_t cut = h.size();
        while (cut > 1 && std::abs(h[cut - 1]) < 1e-12) --cut;
        h.resize(cut);
        const auto sim = simulate(iir, input, 48);
        const auto approx = convolve(h, x, 48);
        for (std::size_t n = 0; n < 48; ++n)
            CHECK(sim.samples[n] == doctest::Approx(approx[n]).epsilon(1e-9));
    }
}

TEST_CASE("linearity and time invariance") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    const auto de = testing::random_stable_dt_de(rng);

    std::vector<double> xa(32), xb(32);
    for (std::size_t k = 0; k < 32; ++k) {
        xa[k] = amp(rng);
        xb[k] = amp(rng);
    }
    const double alpha = 0.7, beta = -1.3;
    std::vector<double> mix(32);
    for (std::size_t k = 0; k < 32; ++k) mix[k] = alpha * xa[k] + beta * xb[k];

    const auto ya = simulate(de, Sequence(xa, 1.0), 32);
    const auto yb = simulate(de, Sequence(xb, 1.0), 32);
    const auto ymix = simulate(de, Sequence(mix, 1.0), 32);
    for (std::size_t k = 0; k < 32; ++k)
        CHECK(ymix.samples[k] == doctest::Approx(alpha * ya.samples[k] + beta * yb.samples[k]).epsilon(1e-9));

    // shift by 3 shifts the zero-state response by 3
    std::vector<double> shifted(32, 0.0);
    for (std::size_t k = 3; k < 32; ++k) shifted[k] = xa[k - 3];
    const auto yshift = simulate(de, Sequence(shifted, 1.0), 32);
    for (std::size_t k = 3; k < 32; ++k)
        CHECK(yshift.samples[k] == doctest::Approx(ya.samples[k - 3]).epsilon(1e-12));
}

TEST_CASE("stability of poles maps to boundedness of responses") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 15; ++trial) {
        const auto de = testing::random_stable_dt_de(rng);
        const auto h = impulse_response_dt(de, 201).samples;

        // log-linear fit of |h[n]| over n in [10, 200] gives a decay rate < 1
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int count = 0;
        for (int n = 10; n <= 200; ++n) {
            const double v = std::abs(h[static_cast<std::size_t>(n)]);
            if (v < 1e-290) continue;
            const double lx = n, ly = std::log(v);
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
            ++count;
        }
        if (count < 20) continue;  // response already below resolution
        const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
        CHECK(std::exp(slope) < 1.0);
    }

    // an unstable pole grows monotonically beyond n = 50
    const DifferenceEquation growing({1.0}, {1.0, -1.05});
    const auto h = impulse_response_dt(growing, 120).samples;
    double running_max = 0.0;
    for (int n = 0; n <= 50; ++n) running_max = std::max(running_max, std::abs(h[static_cast<std::size_t>(n)]));
    for (int n = 51; n < 120; ++n) {
        CHECK(std::abs(h[static_cast<std::size_t>(n)]) > running_max);
        running_max = std::abs(h[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("negative real pole alternates in sign") {
    const DifferenceEquation de({1.0}, {1.0, 0.8});
    const auto h = impulse_response_dt(de, 32).samples;
    for (std::size_t n = 1; n < 32; ++n) CHECK(h[n] * h[n - 1] < 0.0);
}

TEST_CASE("difference equation round trips through the transfer function") {
    const DifferenceEquation de({0.5, 0.2}, {1.0, -0.6});
    const RationalTF tf = to_tf(de);
    CHECK(tf.domain == Domain::dt_zinv);
    const DifferenceEquation back = to_difference_equation(tf);
    CHECK(back.b == de.b);
    CHECK(back.a == de.a);
}
