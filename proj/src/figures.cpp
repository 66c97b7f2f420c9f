#include "ltikit/figures.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ltikit/blocks.hpp"
#include "ltikit/csv.hpp"
#include "ltikit/ct.hpp"
#include "ltikit/discretize.hpp"
#include "ltikit/dt.hpp"
#include "ltikit/errors.hpp"
#include "ltikit/svg.hpp"

namespace ltikit {

namespace {

DifferenceEquation figure_system(const FigureSpec& spec) {
    if (spec.id == "f3") return flatten(canonical(Architecture::fir_differentiator, spec.parameter));
    if (spec.id == "f4") return flatten(canonical(Architecture::moving_sum, spec.parameter));
    if (spec.id == "f5") return flatten(canonical(Architecture::accumulator, spec.parameter));
    if (spec.id == "f6") return flatten(canonical(Architecture::oscillator, spec.parameter));
    if (spec.id == "f7")
        return DifferenceEquation({0.0, 1.0 - spec.parameter}, {1.0, -spec.parameter});
    if (spec.id == "f8") return negative_pole_filter(spec.parameter);
    if (spec.id == "f9") return dt_hpf(spec.parameter);
    throw BadParameter("unknown figure id: " + spec.id);
}

std::string figure_title(const FigureSpec& spec) {
    if (spec.id == "f1") return "physical first-order response";
    if (spec.id == "f3") return "discrete differentiator";
    if (spec.id == "f4") return "two-sample moving sum";
    if (spec.id == "f5") return "discrete accumulator";
    if (spec.id == "f6") return "discrete oscillator";
    if (spec.id == "f7") return "discrete low-pass, zp=" + format_double(spec.parameter);
    if (spec.id == "f8") return "negative-pole filter, zp=" + format_double(spec.parameter);
    return "discrete high-pass, zp=" + format_double(spec.parameter);
}

// mid-bin grid over (0, Fs/2): keeps unit-circle poles at DC/Nyquist off the grid
std::vector<double> dt_grid(double fs, std::size_t points) {
    std::vector<double> f(points);
    for (std::size_t k = 0; k < points; ++k)
        f[k] = (static_cast<double>(k) + 0.5) * (fs / 2.0) / static_cast<double>(points);
    return f;
}

std::vector<NamedFile> render_f1(const FigureSpec& spec) {
    const RationalTF tf = cascade({hpf(spec.tau), lpf(spec.tau_nd)});

    // 512 points per decade over [1e-3, 1e3] Hz
    const int decades_lo = -3, decades_hi = 3;
    const std::size_t per_decade = spec.freq_points;
    std::vector<double> f_hz;
    for (std::size_t k = 0; k <= per_decade * static_cast<std::size_t>(decades_hi - decades_lo); ++k)
        f_hz.push_back(std::pow(10.0, decades_lo + static_cast<double>(k) / static_cast<double>(per_decade)));

    std::vector<double> omega(f_hz.size());
    for (std::size_t k = 0; k < f_hz.size(); ++k) omega[k] = 2.0 * std::numbers::pi * f_hz[k];
    const FrequencyResponse fr = freq_response(tf, omega);

    std::vector<std::vector<double>> rows(f_hz.size());
    for (std::size_t k = 0; k < f_hz.size(); ++k)
        rows[k] = {f_hz[k], fr.magnitude_db[k], fr.phase_rad[k]};

    const std::string csv = write_csv({"freq_hz", "magnitude_db", "phase_rad"}, rows);
    const std::string svg = svg_line_chart(
        figure_title(spec), "frequency [Hz] (log)", "magnitude [dB] / phase [rad]",
        {{"magnitude [dB]", "#1f6fb4", f_hz, fr.magnitude_db},
         {"phase [rad]", "#c05020", f_hz, fr.phase_rad}},
        true);
    return {{"f1_frequency.csv", csv}, {"f1_frequency.svg", svg}};
}

}  // namespace

FigureSpec default_figure(const std::string& id) {
    FigureSpec spec;
    spec.id = id;
    if (id == "f1") return spec;
    if (id == "f3" || id == "f4" || id == "f5" || id == "f6") {
        spec.parameter = 1.0;
        return spec;
    }
    if (id == "f7" || id == "f8" || id == "f9") {
        spec.parameter = 0.6;
        return spec;
    }
    throw BadParameter("unknown figure id: " + id);
}

std::vector<NamedFile> generate_figure(const FigureSpec& spec) {
    if (spec.id == "f1") return render_f1(spec);
    const DifferenceEquation de = figure_system(spec);

    const Sequence impulse = impulse_response_dt(de, spec.n);
    const Sequence step = step_response_dt(de, spec.n);
    std::vector<std::vector<double>> transient_rows(spec.n);
    std::vector<double> n_axis(spec.n);
    for (std::size_t k = 0; k < spec.n; ++k) {
        n_axis[k] = static_cast<double>(k);
        transient_rows[k] = {n_axis[k], impulse.samples[k], step.samples[k]};
    }

    const std::vector<double> f_hz = dt_grid(spec.fs, spec.freq_points);
    const FrequencyResponse fr = dt_freq_response(de, spec.fs, f_hz);
    std::vector<std::vector<double>> freq_rows(f_hz.size());
    for (std::size_t k = 0; k < f_hz.size(); ++k)
        freq_rows[k] = {f_hz[k], fr.magnitude_db[k], fr.phase_rad[k]};

    const std::string title = figure_title(spec);
    std::vector<NamedFile> files;
    files.emplace_back(spec.id + "_transient.csv",
                       write_csv({"n", "impulse", "step"}, transient_rows));
    files.emplace_back(spec.id + "_transient.svg",
                       svg_line_chart(title + " (transient)", "sample n", "amplitude",
                                      {{"impulse", "#1f6fb4", n_axis, impulse.samples},
                                       {"step", "#c05020", n_axis, step.samples}}));
    files.emplace_back(spec.id + "_frequency.csv",
                       write_csv({"freq_hz", "magnitude_db", "phase_rad"}, freq_rows));
    files.emplace_back(spec.id + "_frequency.svg",
                       svg_line_chart(title + " (frequency)", "frequency [Hz]",
                                      "magnitude [dB] / phase [rad]",
                                      {{"magnitude [dB]", "#1f6fb4", f_hz, fr.magnitude_db},
                                       {"phase [rad]", "#c05020", f_hz, fr.phase_rad}}));
    return files;
}

}  // namespace ltikit
