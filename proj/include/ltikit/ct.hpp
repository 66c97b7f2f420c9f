#pragma once

#include <vector>

#include "ltikit/frequency_response.hpp"
#include "ltikit/rational.hpp"
#include "ltikit/sequence.hpp"

namespace ltikit {

struct ModalTerm {
    Complex pole;
    int multiplicity = 1;
    std::vector<Complex> coeffs;  // coeffs[k-1] weights t^{k-1}/(k-1)! e^{pole*t}
};

/// Modal impulse-response form h(t) = u(t) * sum_j e^{p_j t} sum_k c_jk t^{k-1}/(k-1)!.
/// Conjugate-pair terms combine into damped cosines, so the value is real.
struct ImpulseResponseModel {
    std::vector<ModalTerm> terms;
    bool causal = true;
};

ImpulseResponseModel impulse_model(const PartialFractionExpansion& pfe);

/// Complex-valued evaluation (imaginary part is the symmetry residue).
Complex evaluate_impulse_complex(const ImpulseResponseModel& model, double t);
double evaluate_impulse_at(const ImpulseResponseModel& model, double t);
std::vector<double> evaluate_impulse(const ImpulseResponseModel& model,
                                     const std::vector<double>& t_grid);

FrequencyResponse freq_response(const RationalTF& tf, const std::vector<double>& omega_grid);

/// H(s) = 1/(1 + s*tau), pole at -1/tau.
RationalTF lpf(double tau);
/// H(s) = s*tau/(1 + s*tau) = 1 - lpf(tau), zero at 0, pole at -1/tau.
RationalTF hpf(double tau);

/// Pure propagation delay factor e^{-i*omega*tau_d}: unit magnitude, linear phase.
FrequencyResponse with_delay(const FrequencyResponse& fr, double tau_d);

/// Dominant frequency of a 10%-90% transition: omega_max = 2*pi*0.35/t_trans.
double transition_bandwidth(double t_trans);

/// Causal convolution of the modal response with a sampled input, using
/// trapezoidal quadrature on the input grid.
Sequence convolve_response(const ImpulseResponseModel& model, const Sequence& input);

}  // namespace ltikit
