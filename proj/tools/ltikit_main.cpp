#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ltikit/blocks.hpp"
#include "ltikit/csv.hpp"
#include "ltikit/ct.hpp"
#include "ltikit/discretize.hpp"
#include "ltikit/dt.hpp"
#include "ltikit/errors.hpp"
#include "ltikit/figures.hpp"
#include "ltikit/rational.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "start:stop:count" inclusive linear grid, or a single value
std::vector<double> parse_grid(const std::string& spec) {
    const auto c1 = spec.find(':');
    if (c1 == std::string::npos) return {std::stod(spec)};
    const auto c2 = spec.find(':', c1 + 1);
    if (c2 == std::string::npos) throw UsageError("grid spec must be value or start:stop:count");
    const double start = std::stod(spec.substr(0, c1));
    const double stop = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
    const long count = std::stol(spec.substr(c2 + 1));
    if (count <= 0) throw UsageError("empty frequency grid");
    std::vector<double> grid(static_cast<std::size_t>(count));
    if (count == 1) {
        grid[0] = start;
        return grid;
    }
    for (long j = 0; j < count; ++j)
        grid[static_cast<std::size_t>(j)] =
            start + (stop - start) * static_cast<double>(j) / static_cast<double>(count - 1);
    return grid;
}

std::vector<double> default_ct_grid() {
    // 512 log-spaced points per decade over [1e-3, 1e3] Hz
    std::vector<double> f;
    for (int k = 0; k <= 512 * 6; ++k) f.push_back(std::pow(10.0, -3.0 + k / 512.0));
    return f;
}

std::vector<double> default_dt_grid(double fs) {
    std::vector<double> f(512);
    for (std::size_t k = 0; k < f.size(); ++k)
        f[k] = (static_cast<double>(k) + 0.5) * (fs / 2.0) / 512.0;
    return f;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file: " + out_path);
    out << text;
}

std::string response_csv(const ltikit::FrequencyResponse& fr, const std::vector<double>& f_hz) {
    std::vector<std::vector<double>> rows(f_hz.size());
    for (std::size_t k = 0; k < f_hz.size(); ++k)
        rows[k] = {f_hz[k], fr.magnitude_db[k], fr.phase_rad[k]};
    return ltikit::write_csv({"freq_hz", "magnitude_db", "phase_rad"}, rows);
}

struct ResponseOptions {
    std::string ct_kind;
    std::string dt_kind;
    std::string netlist_path;
    double tau = 1.0;
    double ts = 0.0;
    double zp = -1.0;
    double zz = 1.0;
    double fs = 1.0;
    double delay = 0.0;
    std::string grid_spec;
    std::string out_path;
};

int run_response(const ResponseOptions& opt) {
    const int selected = int(!opt.ct_kind.empty()) + int(!opt.dt_kind.empty()) +
                         int(!opt.netlist_path.empty());
    if (selected != 1) throw UsageError("choose exactly one of --ct, --dt, --netlist");

    if (!opt.ct_kind.empty()) {
        if (!(opt.tau > 0.0)) throw UsageError("--tau must be positive");
        ltikit::RationalTF tf = opt.ct_kind == "lpf"   ? ltikit::lpf(opt.tau)
                                : opt.ct_kind == "hpf" ? ltikit::hpf(opt.tau)
                                                       : throw UsageError("--ct expects lpf or hpf");
        const std::vector<double> f_hz =
            opt.grid_spec.empty() ? default_ct_grid() : parse_grid(opt.grid_spec);
        if (f_hz.empty()) throw UsageError("empty frequency grid");
        std::vector<double> omega(f_hz.size());
        for (std::size_t k = 0; k < f_hz.size(); ++k)
            omega[k] = 2.0 * std::numbers::pi * f_hz[k];
        ltikit::FrequencyResponse fr = ltikit::freq_response(tf, omega);
        if (opt.delay > 0.0) fr = ltikit::with_delay(fr, opt.delay);
        emit(response_csv(fr, f_hz), opt.out_path);
        return kExitOk;
    }

    ltikit::DifferenceEquation de({1.0}, {1.0});
    if (!opt.netlist_path.empty()) {
        std::ifstream in(opt.netlist_path);
        if (!in) throw UsageError("cannot open netlist: " + opt.netlist_path);
        de = ltikit::flatten(ltikit::parse_netlist(in));
    } else if (opt.dt_kind == "differentiator") {
        de = ltikit::flatten(ltikit::canonical(ltikit::Architecture::fir_differentiator, opt.zz));
    } else if (opt.dt_kind == "moving_sum") {
        de = ltikit::flatten(ltikit::canonical(ltikit::Architecture::moving_sum, opt.zz));
    } else if (opt.dt_kind == "accumulator") {
        de = ltikit::flatten(ltikit::canonical(ltikit::Architecture::accumulator,
                                               opt.zp < 0.0 ? 1.0 : opt.zp));
    } else if (opt.dt_kind == "oscillator") {
        de = ltikit::flatten(ltikit::canonical(ltikit::Architecture::oscillator,
                                               opt.zp < 0.0 ? 1.0 : opt.zp));
    } else if (opt.dt_kind == "lpf") {
        if (opt.zp >= 0.0) {
            de = ltikit::DifferenceEquation({0.0, 1.0 - opt.zp}, {1.0, -opt.zp});
        } else {
            if (!(opt.ts > 0.0)) throw UsageError("--dt lpf needs --zp or --tau with --ts");
            de = ltikit::dt_lpf(opt.tau, opt.ts);
        }
    } else if (opt.dt_kind == "hpf") {
        if (opt.zp < 0.0) throw UsageError("--dt hpf needs --zp in (0,1)");
        de = ltikit::dt_hpf(opt.zp);
    } else if (opt.dt_kind == "negpole") {
        if (opt.zp < 0.0) throw UsageError("--dt negpole needs --zp in (0,1)");
        de = ltikit::negative_pole_filter(opt.zp);
    } else {
        throw UsageError("unknown --dt system: " + opt.dt_kind);
    }

    if (!(opt.fs > 0.0)) throw UsageError("--fs must be positive");
    const std::vector<double> f_hz =
        opt.grid_spec.empty() ? default_dt_grid(opt.fs) : parse_grid(opt.grid_spec);
    if (f_hz.empty()) throw UsageError("empty frequency grid");
    const ltikit::FrequencyResponse fr = ltikit::dt_freq_response(de, opt.fs, f_hz);
    emit(response_csv(fr, f_hz), opt.out_path);
    return kExitOk;
}

int run_figure(const std::string& id, std::optional<double> param, std::optional<double> tau,
               std::optional<double> fs, std::optional<long> n, const std::string& outdir) {
    ltikit::FigureSpec spec = ltikit::default_figure(id);
    if (param) spec.parameter = *param;
    if (tau) spec.tau = *tau;
    if (fs) {
        if (!(*fs > 0.0)) throw UsageError("--fs must be positive");
        spec.fs = *fs;
    }
    if (n) {
        if (*n < 1) throw UsageError("--n must be at least 1");
        spec.n = static_cast<std::size_t>(*n);
    }
    std::filesystem::create_directories(outdir);
    for (const auto& [name, contents] : ltikit::generate_figure(spec)) {
        const auto path = std::filesystem::path(outdir) / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw UsageError("cannot write " + path.string());
        out << contents;
        std::cout << path.string() << "\n";
    }
    return kExitOk;
}

int run_discretize(const std::string& kind, double tau, double ts, const std::string& method,
                   std::optional<double> match_omega, const std::string& csv_path) {
    if (!(tau > 0.0)) throw UsageError("--tau must be positive");
    if (!(ts > 0.0)) throw UsageError("--ts must be positive");
    const ltikit::RationalTF ct = kind == "lpf"   ? ltikit::lpf(tau)
                                  : kind == "hpf" ? ltikit::hpf(tau)
                                                  : throw UsageError("discretize expects lpf or hpf");

    ltikit::RationalTF dt({1.0}, {1.0}, ltikit::Domain::dt_zinv);
    if (method == "euler") {
        dt = ltikit::backward_euler(ct, ts);
    } else if (method == "tustin") {
        dt = ltikit::tustin(ct, ts);
    } else if (method == "matched") {
        dt = ltikit::from_pzg(ltikit::matched_pz(ltikit::to_pzg(ct), ts, match_omega));
    } else {
        throw UsageError("--method expects euler, matched, or tustin");
    }

    const ltikit::DifferenceEquation de = ltikit::to_difference_equation(dt);
    const ltikit::PoleZeroGain pzg = ltikit::to_pzg(dt);

    std::cout << "method: " << method << "\n";
    std::cout << "b:";
    for (double v : de.b) std::cout << ' ' << ltikit::format_double(v);
    std::cout << "\na:";
    for (double v : de.a) std::cout << ' ' << ltikit::format_double(v);
    std::cout << "\nzeros:";
    for (const auto& z : pzg.zeros)
        std::cout << ' ' << ltikit::format_double(z.value.real()) << (z.value.imag() < 0 ? "-" : "+")
                  << ltikit::format_double(std::abs(z.value.imag())) << "i x" << z.multiplicity;
    std::cout << "\npoles:";
    for (const auto& p : pzg.poles)
        std::cout << ' ' << ltikit::format_double(p.value.real()) << (p.value.imag() < 0 ? "-" : "+")
                  << ltikit::format_double(std::abs(p.value.imag())) << "i x" << p.multiplicity;
    std::cout << "\ngain: " << ltikit::format_double(pzg.gain) << "\n";

    if (!csv_path.empty()) {
        std::vector<std::vector<double>> rows;
        const std::size_t taps = std::max(de.b.size(), de.a.size());
        for (std::size_t k = 0; k < taps; ++k)
            rows.push_back({static_cast<double>(k), k < de.b.size() ? de.b[k] : 0.0,
                            k < de.a.size() ? de.a[k] : 0.0});
        emit(ltikit::write_csv({"tap", "b", "a"}, rows), csv_path);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"first-order CT/DT filter design and simulation toolkit"};
    app.require_subcommand(1);

    ResponseOptions resp;
    auto* response = app.add_subcommand("response", "frequency response as CSV");
    response->add_option("--ct", resp.ct_kind, "CT system: lpf or hpf");
    response->add_option("--dt", resp.dt_kind,
                         "DT system: differentiator, moving_sum, accumulator, oscillator, lpf, hpf, negpole");
    response->add_option("--netlist", resp.netlist_path, "block-diagram netlist file");
    response->add_option("--tau", resp.tau, "CT time constant [s]");
    response->add_option("--ts", resp.ts, "sampling period for --dt lpf [s]");
    response->add_option("--zp", resp.zp, "pole parameter in [0,1]");
    response->add_option("--zz", resp.zz, "zero parameter in [0,1]");
    response->add_option("--fs", resp.fs, "sampling rate [Hz]");
    response->add_option("--delay", resp.delay, "propagation delay [s] applied to CT responses");
    response->add_option("--f", resp.grid_spec, "frequency grid: value or start:stop:count [Hz]");
    response->add_option("-o,--out", resp.out_path, "output CSV path (stdout when omitted)");

    std::string figure_id, outdir = ".";
    std::optional<double> fig_param, fig_tau, fig_fs;
    std::optional<long> fig_n;
    auto* figure = app.add_subcommand("figure", "reproduce a figure as CSV + SVG");
    figure->add_option("id", figure_id, "figure id: f1, f3..f9")->required();
    figure->add_option("--zp", fig_param, "pole parameter");
    figure->add_option("--zz", fig_param, "zero parameter");
    figure->add_option("--tau", fig_tau, "f1 dominant time constant [s]");
    figure->add_option("--fs", fig_fs, "sampling rate [Hz]");
    figure->add_option("--n", fig_n, "transient samples");
    figure->add_option("--outdir", outdir, "output directory");

    std::string disc_kind, disc_method = "euler", disc_csv;
    double disc_tau = 1.0, disc_ts = 0.0;
    std::optional<double> disc_match;
    auto* discretize = app.add_subcommand("discretize", "map a CT design to DT coefficients");
    discretize->add_option("system", disc_kind, "lpf or hpf")->required();
    discretize->add_option("--tau", disc_tau, "CT time constant [s]")->required();
    discretize->add_option("--ts", disc_ts, "sampling period [s]")->required();
    discretize->add_option("--method", disc_method, "euler, matched, or tustin");
    discretize->add_option("--match-omega", disc_match, "matched-map gain frequency [rad/s]");
    discretize->add_option("--csv", disc_csv, "also write the coefficient table as CSV");

    try {
        app.parse(argc, argv);
        if (response->parsed()) return run_response(resp);
        if (figure->parsed()) return run_figure(figure_id, fig_param, fig_tau, fig_fs, fig_n, outdir);
        if (discretize->parsed())
            return run_discretize(disc_kind, disc_tau, disc_ts, disc_method, disc_match, disc_csv);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ltikit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
