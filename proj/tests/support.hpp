#pragma once

#include <random>
#include <vector>

#include "ltikit/dt.hpp"
#include "ltikit/rational.hpp"

namespace ltikit::testing {

// Stable CT constellation with well-separated roots: poles strictly in the
// left half-plane, zero count below pole count, conjugate pairs exact.
inline PoleZeroGain random_stable_ct_pzg(std::mt19937& rng, int max_order = 4) {
    std::uniform_real_distribution<double> sigma(-5.0, -0.5);
    std::uniform_real_distribution<double> omega(0.5, 3.0);
    std::uniform_real_distribution<double> zero_re(-5.0, 5.0);
    std::uniform_real_distribution<double> gain(0.5, 2.0);
    std::uniform_int_distribution<int> order_pick(1, max_order);
    std::bernoulli_distribution coin(0.5);

    const int order = order_pick(rng);
    auto far_enough = [](const std::vector<RootMult>& roots, const Complex& c) {
        for (const auto& r : roots)
            if (std::abs(r.value - c) < 0.3) return false;
        return true;
    };

    PoleZeroGain pzg;
    pzg.domain = Domain::ct_s;
    while (static_cast<int>(pzg.poles.size()) < order) {
        const bool pair_fits = order - static_cast<int>(pzg.poles.size()) >= 2;
        if (pair_fits && coin(rng)) {
            const Complex p{sigma(rng), omega(rng)};
            if (!far_enough(pzg.poles, p)) continue;
            pzg.poles.push_back({p, 1});
            pzg.poles.push_back({std::conj(p), 1});
        } else {
            const Complex p{sigma(rng), 0.0};
            if (!far_enough(pzg.poles, p)) continue;
            pzg.poles.push_back({p, 1});
        }
    }

    std::uniform_int_distribution<int> zero_pick(0, order - 1);
    const int zero_count = zero_pick(rng);
    while (static_cast<int>(pzg.zeros.size()) < zero_count) {
        const bool pair_fits = zero_count - static_cast<int>(pzg.zeros.size()) >= 2;
        if (pair_fits && coin(rng)) {
            const Complex z{zero_re(rng), omega(rng)};
            if (!far_enough(pzg.zeros, z) || !far_enough(pzg.poles, z)) continue;
            pzg.zeros.push_back({z, 1});
            pzg.zeros.push_back({std::conj(z), 1});
        } else {
            const Complex z{zero_re(rng), 0.0};
            if (!far_enough(pzg.zeros, z) || !far_enough(pzg.poles, z)) continue;
            pzg.zeros.push_back({z, 1});
        }
    }
    pzg.gain = gain(rng);
    return pzg;
}

// Stable first- or second-order DT difference equation.
inline DifferenceEquation random_stable_dt_de(std::mt19937& rng) {
    std::uniform_real_distribution<double> modulus(0.2, 0.9);
    std::uniform_real_distribution<double> angle(0.3, 2.8);
    std::uniform_real_distribution<double> tap(-1.0, 1.0);
    std::bernoulli_distribution coin(0.5);
    std::bernoulli_distribution second_order(0.5);

    std::vector<double> a;
    if (second_order(rng)) {
        if (coin(rng)) {
            const double rho = modulus(rng), theta = angle(rng);
            a = {1.0, -2.0 * rho * std::cos(theta), rho * rho};
        } else {
            const double p1 = coin(rng) ? modulus(rng) : -modulus(rng);
            const double p2 = coin(rng) ? modulus(rng) : -modulus(rng);
            a = {1.0, -(p1 + p2), p1 * p2};
        }
    } else {
        const double p = coin(rng) ? modulus(rng) : -modulus(rng);
        a = {1.0, -p};
    }

    std::vector<double> b(a.size());
    do {
        for (double& v : b) v = tap(rng);
    } while (std::abs(b[0]) < 0.1);
    return DifferenceEquation(b, a);
}

}  // namespace ltikit::testing
