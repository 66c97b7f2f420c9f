#pragma once

#include <optional>

#include "ltikit/dt.hpp"
#include "ltikit/rational.hpp"

namespace ltikit {

/// Substitutes s <- (1 - z^-1)/Ts and clears denominators; the result is
/// normalized so the leading feedback coefficient is 1. Strictly-LHP poles
/// map inside the unit circle.
RationalTF backward_euler(const RationalTF& tf, double ts);

/// Bilinear substitution s <- (2/Ts)(1 - z^-1)/(1 + z^-1), for comparison
/// against the backward-Euler and matched mappings.
RationalTF tustin(const RationalTF& tf, double ts);

/// Exact root mapping z = e^{s*Ts} with gain matched at gain_match_omega
/// (rad/s). When omitted, the match frequency is DC, or a quarter of the
/// sampling rate when the CT response vanishes at DC.
PoleZeroGain matched_pz(const PoleZeroGain& pzg, double ts,
                        std::optional<double> gain_match_omega = std::nullopt);

/// Principal inverse of the exact map: s = log(z)/Ts with Im(s)*Ts in (-pi, pi].
Complex inv_map(const Complex& z, double ts);

/// H(z) = (1-z_p) z^-1 / (1 - z_p z^-1) with z_p = tau/(tau + Ts); unity DC gain.
DifferenceEquation dt_lpf(double tau, double ts);

/// H(z) = (1 - z^-1)/(1 - z_p z^-1): zero at DC, stabilizing pole at z_p.
DifferenceEquation dt_hpf(double pole);

/// H(z) = (1+z_p) z^-1 / (1 + z_p z^-1): negative pole, alternating decay,
/// Nyquist-amplifying response.
DifferenceEquation negative_pole_filter(double pole_magnitude);

/// Re-maps a DT constellation to a new sampling rate through the exact
/// log/exp composition, holding the equivalent CT roots fixed.
PoleZeroGain retune(const PoleZeroGain& pzg, double fs_old, double fs_new);

}  // namespace ltikit
