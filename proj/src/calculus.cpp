#include "ltikit/calculus.hpp"

#include <cmath>
#include <stdexcept>

#include "ltikit/errors.hpp"

namespace ltikit {

namespace {

std::vector<double> binomial_weights(int n) {
    // (-1)^m * C(n, m), m = 0..n
    std::vector<double> w(static_cast<std::size_t>(n) + 1);
    double c = 1.0;
    for (int m = 0; m <= n; ++m) {
        w[static_cast<std::size_t>(m)] = (m % 2 == 0) ? c : -c;
        c = c * static_cast<double>(n - m) / static_cast<double>(m + 1);
    }
    return w;
}

}  // namespace

Sequence backward_difference(const Sequence& x, int order) {
    if (order < 1) throw std::invalid_argument("difference order must be >= 1");
    if (x.size() <= static_cast<std::size_t>(order))
        throw SequenceTooShort("sequence shorter than the difference stencil");

    const auto w = binomial_weights(order);
    const double ts_pow = std::pow(x.ts(), order);
    std::vector<double> y(x.size() - static_cast<std::size_t>(order));
    for (std::size_t k = 0; k < y.size(); ++k) {
        double acc = 0.0;
        for (int m = 0; m <= order; ++m)
            acc += w[static_cast<std::size_t>(m)] *
                   x.samples[k + static_cast<std::size_t>(order - m)];
        y[k] = acc / ts_pow;
    }
    return Sequence(std::move(y), x.sample_rate, x.origin + order);
}

double rect_integrate(const Sequence& x, std::size_t p, std::size_t q) {
    if (!(p < q && q < x.size())) throw BadRange("rectangle rule needs 0 <= p < q < length");
    double acc = 0.0;
    for (std::size_t k = p; k < q; ++k) acc += x.samples[k];
    return acc * x.ts();
}

double trap_integrate(const Sequence& x, std::size_t p, std::size_t q) {
    if (!(p < q && q < x.size())) throw BadRange("trapezoid rule needs 0 <= p < q < length");
    double acc = 0.0;
    for (std::size_t k = p + 1; k <= q; ++k) acc += 0.5 * (x.samples[k - 1] + x.samples[k]);
    return acc * x.ts();
}

TestSignal TestSignal::sine(double amplitude, double omega) {
    TestSignal s;
    s.kind = Kind::sine;
    s.amplitude = amplitude;
    s.parameter = omega;
    return s;
}

TestSignal TestSignal::exponential(double amplitude, double rate) {
    TestSignal s;
    s.kind = Kind::exponential;
    s.amplitude = amplitude;
    s.parameter = rate;
    return s;
}

TestSignal TestSignal::polynomial(std::vector<double> coeffs) {
    TestSignal s;
    s.kind = Kind::polynomial;
    s.coeffs = std::move(coeffs);
    return s;
}

double TestSignal::value(double t) const {
    switch (kind) {
        case Kind::sine: return amplitude * std::sin(parameter * t);
        case Kind::exponential: return amplitude * std::exp(parameter * t);
        case Kind::polynomial: {
            double acc = 0.0;
            for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
            return acc;
        }
    }
    return 0.0;
}

double TestSignal::integral(double a, double b) const {
    switch (kind) {
        case Kind::sine:
            return amplitude / parameter * (std::cos(parameter * a) - std::cos(parameter * b));
        case Kind::exponential:
            return amplitude / parameter * (std::exp(parameter * b) - std::exp(parameter * a));
        case Kind::polynomial: {
            double acc_b = 0.0, acc_a = 0.0;
            for (std::size_t k = coeffs.size(); k > 0; --k) {
                const double c = coeffs[k - 1] / static_cast<double>(k);
                acc_b = (acc_b + c) * b;
                acc_a = (acc_a + c) * a;
            }
            // antiderivative evaluated via Horner with an extra factor of t
            return acc_b - acc_a;
        }
    }
    return 0.0;
}

double TestSignal::derivative(double t, int order) const {
    switch (kind) {
        case Kind::sine: {
            // d^n/dt^n [A sin(wt)] cycles through sin/cos with sign flips
            const double scale = amplitude * std::pow(parameter, order);
            switch (order % 4) {
                case 0: return scale * std::sin(parameter * t);
                case 1: return scale * std::cos(parameter * t);
                case 2: return -scale * std::sin(parameter * t);
                default: return -scale * std::cos(parameter * t);
            }
        }
        case Kind::exponential:
            return amplitude * std::pow(parameter, order) * std::exp(parameter * t);
        case Kind::polynomial: {
            std::vector<double> c = coeffs;
            for (int d = 0; d < order; ++d) {
                if (c.size() <= 1) return 0.0;
                std::vector<double> next(c.size() - 1);
                for (std::size_t k = 1; k < c.size(); ++k)
                    next[k - 1] = c[k] * static_cast<double>(k);
                c = std::move(next);
            }
            double acc = 0.0;
            for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
            return acc;
        }
    }
    return 0.0;
}

ErrorOrderReport error_order(QuadRule rule, const TestSignal& signal,
                             const std::vector<double>& ts_list, double t_end,
                             int difference_order) {
    if (ts_list.size() < 3) throw std::invalid_argument("need at least 3 step sizes");
    for (std::size_t i = 1; i < ts_list.size(); ++i) {
        if (std::abs(ts_list[i] - 0.5 * ts_list[i - 1]) > 1e-12 * ts_list[i - 1])
            throw std::invalid_argument("each step size must halve the previous one");
    }
    if (!(t_end > 0.0)) throw NonPositive("measurement interval must be positive");

    ErrorOrderReport report;
    report.step_sizes = ts_list;
    report.errors.resize(ts_list.size());

    // snap the endpoint to the coarsest grid so every halved step lands on
    // the same interval and the leading error constant stays comparable
    const double t_snap =
        std::floor(t_end / ts_list[0] + 1e-12) * ts_list[0];

    for (std::size_t i = 0; i < ts_list.size(); ++i) {
        const double ts = ts_list[i];
        const auto count = static_cast<std::size_t>(std::llround(t_snap / ts));
        std::vector<double> samples(count + 1);
        for (std::size_t k = 0; k <= count; ++k)
            samples[k] = signal.value(static_cast<double>(k) * ts);
        const Sequence seq(std::move(samples), 1.0 / ts);

        double err = 0.0;
        switch (rule) {
            case QuadRule::rectangle:
                err = std::abs(rect_integrate(seq, 0, count) -
                               signal.integral(0.0, static_cast<double>(count) * ts));
                break;
            case QuadRule::trapezoid:
                err = std::abs(trap_integrate(seq, 0, count) -
                               signal.integral(0.0, static_cast<double>(count) * ts));
                break;
            case QuadRule::backward_difference: {
                const Sequence d = backward_difference(seq, difference_order);
                for (std::size_t k = 0; k < d.size(); ++k) {
                    const double t = static_cast<double>(d.origin + static_cast<int>(k)) * ts;
                    err = std::max(err, std::abs(d.samples[k] - signal.derivative(t, difference_order)));
                }
                break;
            }
        }
        if (err < 1e-13 * (1.0 + std::abs(signal.integral(0.0, t_end))))
            throw DegenerateSignal("rule integrates/differentiates the signal exactly");
        report.errors[i] = err;
    }

    // least squares slope of log2(err) against log2(ts)
    const auto n = static_cast<double>(ts_list.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < ts_list.size(); ++i) {
        const double lx = std::log2(ts_list[i]);
        const double ly = std::log2(report.errors[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    report.fitted_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return report;
}

}  // namespace ltikit
