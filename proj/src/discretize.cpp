#include "ltikit/discretize.hpp"

#include <cmath>
#include <numbers>

#include "ltikit/errors.hpp"

namespace ltikit {

namespace {

// Expands sum_k c[k] * Ts^{D-k} * (1-w)^k into a polynomial in w = z^-1.
Polynomial euler_substitute(const Polynomial& p, double ts, int common_degree) {
    std::vector<double> out(static_cast<std::size_t>(common_degree) + 1, 0.0);
    const auto& c = p.coeffs();
    for (int k = 0; k < static_cast<int>(c.size()); ++k) {
        const double scale = c[static_cast<std::size_t>(k)] * std::pow(ts, common_degree - k);
        // signed binomial row of (1-w)^k
        double binom = 1.0;
        for (int m = 0; m <= k; ++m) {
            const double sign = (m % 2 == 0) ? 1.0 : -1.0;
            out[static_cast<std::size_t>(m)] += scale * sign * binom;
            binom = binom * static_cast<double>(k - m) / static_cast<double>(m + 1);
        }
    }
    return Polynomial(std::move(out));
}

RationalTF normalized_dt(Polynomial num, Polynomial den) {
    const double a0 = den.coeffs()[0];
    if (a0 != 0.0 && a0 != 1.0) {
        // true division keeps pole formulas like tau/(tau+Ts) exact in the coefficients
        auto divide = [a0](const Polynomial& p) {
            std::vector<double> c = p.coeffs();
            for (double& v : c) v /= a0;
            return Polynomial(std::move(c));
        };
        num = divide(num);
        den = divide(den);
    }
    return RationalTF(std::move(num), std::move(den), Domain::dt_zinv);
}

Complex eval_pzg(const PoleZeroGain& pzg, const Complex& at) {
    Complex acc{pzg.gain, 0.0};
    for (const auto& z : pzg.zeros)
        for (int m = 0; m < z.multiplicity; ++m) acc *= at - z.value;
    for (const auto& p : pzg.poles)
        for (int m = 0; m < p.multiplicity; ++m) acc /= at - p.value;
    return acc;
}

}  // namespace

RationalTF backward_euler(const RationalTF& tf, double ts) {
    if (tf.domain != Domain::ct_s) throw DomainMismatch("backward Euler expects a CT transfer function");
    if (!(ts > 0.0)) throw NonPositive("sampling period must be positive");
    if (!is_proper(tf)) throw ImproperTF("backward Euler requires a proper transfer function");
    const int common = std::max(tf.num.degree(), tf.den.degree());
    Polynomial num = euler_substitute(tf.num, ts, common);
    Polynomial den = euler_substitute(tf.den, ts, common);
    return normalized_dt(std::move(num), std::move(den));
}

RationalTF tustin(const RationalTF& tf, double ts) {
    if (tf.domain != Domain::ct_s) throw DomainMismatch("Tustin expects a CT transfer function");
    if (!(ts > 0.0)) throw NonPositive("sampling period must be positive");
    if (!is_proper(tf)) throw ImproperTF("Tustin requires a proper transfer function");
    const int common = std::max(tf.num.degree(), tf.den.degree());

    auto substitute = [&](const Polynomial& p) {
        Polynomial acc;
        const auto& c = p.coeffs();
        const Polynomial minus{1.0, -1.0};  // 1 - w
        const Polynomial plus{1.0, 1.0};    // 1 + w
        for (int k = 0; k < static_cast<int>(c.size()); ++k) {
            Polynomial term{c[static_cast<std::size_t>(k)] * std::pow(ts / 2.0, common - k)};
            for (int m = 0; m < k; ++m) term = term * minus;
            for (int m = 0; m < common - k; ++m) term = term * plus;
            acc = acc + term;
        }
        return acc;
    };
    return normalized_dt(substitute(tf.num), substitute(tf.den));
}

Complex inv_map(const Complex& z, double ts) {
    if (z == Complex{0.0}) throw ZeroArgument("the inverse map is undefined at z = 0");
    if (!(ts > 0.0)) throw NonPositive("sampling period must be positive");
    return std::log(z) / ts;
}

PoleZeroGain matched_pz(const PoleZeroGain& pzg, double ts,
                        std::optional<double> gain_match_omega) {
    if (pzg.domain != Domain::ct_s) throw DomainMismatch("matched mapping expects CT poles/zeros");
    if (!(ts > 0.0)) throw NonPositive("sampling period must be positive");

    auto map_roots = [&](const std::vector<RootMult>& roots) {
        std::vector<RootMult> mapped;
        mapped.reserve(roots.size());
        for (const auto& r : roots) {
            if (std::abs(r.value.imag()) * ts >= std::numbers::pi)
                throw NyquistViolation("mapped mode aliases: |Im(s)|*Ts >= pi");
            mapped.push_back({std::exp(r.value * ts), r.multiplicity});
        }
        return mapped;
    };

    PoleZeroGain out;
    out.domain = Domain::dt_zinv;
    out.zeros = map_roots(pzg.zeros);
    out.poles = map_roots(pzg.poles);
    out.gain = 1.0;

    double omega = 0.0;
    if (gain_match_omega) {
        omega = *gain_match_omega;
    } else {
        const Complex dc = eval_pzg(pzg, Complex{0.0});
        omega = std::abs(dc) > 0.0 ? 0.0 : std::numbers::pi / (2.0 * ts);
    }
    if (!(omega < std::numbers::pi / ts))
        throw NyquistViolation("gain match frequency must lie below Nyquist");

    const Complex ct_value = eval_pzg(pzg, Complex{0.0, omega});
    const Complex z0 = std::exp(Complex{0.0, omega * ts});
    const Complex dt_value = eval_pzg(out, z0);
    if (std::abs(dt_value) < 1e-300)
        throw PoleOnGrid("gain match frequency coincides with a mapped root");

    // a real gain can only match the magnitude away from DC; at DC the
    // match is exact including sign
    double k = std::abs(ct_value) / std::abs(dt_value);
    if (omega == 0.0 && (ct_value.real() / dt_value.real()) < 0.0) k = -k;
    out.gain = k;
    return out;
}

DifferenceEquation dt_lpf(double tau, double ts) {
    if (!(tau > 0.0) || !(ts > 0.0)) throw NonPositive("time constant and period must be positive");
    const double zp = tau / (tau + ts);
    return DifferenceEquation({0.0, 1.0 - zp}, {1.0, -zp});
}

DifferenceEquation dt_hpf(double pole) {
    if (!(pole > 0.0 && pole < 1.0)) throw BadPole("high-pass pole must lie in (0, 1)");
    return DifferenceEquation({1.0, -1.0}, {1.0, -pole});
}

DifferenceEquation negative_pole_filter(double pole_magnitude) {
    if (!(pole_magnitude > 0.0 && pole_magnitude < 1.0))
        throw BadPole("pole magnitude must lie in (0, 1)");
    return DifferenceEquation({0.0, 1.0 + pole_magnitude}, {1.0, pole_magnitude});
}

PoleZeroGain retune(const PoleZeroGain& pzg, double fs_old, double fs_new) {
    if (pzg.domain != Domain::dt_zinv) throw DomainMismatch("retune expects a DT constellation");
    if (!(fs_old > 0.0) || !(fs_new > 0.0)) throw NonPositive("sampling rates must be positive");
    const double ts_old = 1.0 / fs_old;
    const double ts_new = 1.0 / fs_new;

    auto remap = [&](const std::vector<RootMult>& roots) {
        std::vector<RootMult> out;
        out.reserve(roots.size());
        for (const auto& r : roots) {
            if (r.value == Complex{0.0})
                throw ZeroArgument("retune requires all poles/zeros off the origin");
            const Complex s = inv_map(r.value, ts_old);
            if (std::abs(s.imag()) * ts_new >= std::numbers::pi)
                throw NyquistViolation("retuned mode exceeds the new Nyquist limit");
            out.push_back({std::exp(s * ts_new), r.multiplicity});
        }
        return out;
    };

    PoleZeroGain out;
    out.domain = Domain::dt_zinv;
    out.zeros = remap(pzg.zeros);
    out.poles = remap(pzg.poles);
    out.gain = pzg.gain;
    return out;
}

}  // namespace ltikit
