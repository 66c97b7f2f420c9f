#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ltikit {

/// Parameters of one reproducible figure. Defaults follow the captions:
/// unit gains for the canonical architectures, z_p = 0.6 for the discrete
/// LPF/negative-pole/HPF figures.
struct FigureSpec {
    std::string id;          // f1, f3 .. f9
    double tau = 1.0;        // f1 dominant time constant
    double tau_nd = 0.01;    // f1 non-dominant time constant
    double parameter = 1.0;  // z_z / z_p of the architecture or filter
    double fs = 1.0;         // Hz
    std::size_t n = 32;      // transient samples
    std::size_t freq_points = 512;
};

/// Captioned default parameters for a figure id; throws on unknown ids.
FigureSpec default_figure(const std::string& id);

using NamedFile = std::pair<std::string, std::string>;  // filename, contents

/// Deterministically renders a figure to its CSV (source of truth) and SVG
/// files; identical specs give identical bytes.
std::vector<NamedFile> generate_figure(const FigureSpec& spec);

}  // namespace ltikit
