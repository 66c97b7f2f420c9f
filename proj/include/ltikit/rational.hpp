#pragma once

#include <vector>

#include "ltikit/polynomial.hpp"

namespace ltikit {

/// Variable of a transfer function: the Laplace variable s, or the unit
/// delay z^-1 (DT polynomials are stored in ascending powers of z^-1).
enum class Domain { ct_s, dt_zinv };

enum class Stability { stable, marginal, unstable };

/// Merging tolerance for numerically split roots and conjugate pairing.
inline double root_tol(double magnitude) { return 1e-8 * (1.0 + magnitude); }

/// Relative tolerance for partial-fraction recombination checks.
inline constexpr double kRecombineTol = 1e-9;

/// Half-width of the marginal band around the stability boundary.
inline constexpr double kStabTol = 1e-12;

struct RationalTF {
    Polynomial num;
    Polynomial den;
    Domain domain = Domain::ct_s;

    RationalTF() : den{1.0} {}
    RationalTF(Polynomial numerator, Polynomial denominator, Domain dom);

    /// Evaluates num(x)/den(x) in the stored variable (s for CT, z^-1 for DT).
    Complex operator()(const Complex& x) const { return num(x) / den(x); }
};

struct RootMult {
    Complex value;
    int multiplicity = 1;
};

/// Factored pole-zero-gain form. For DT systems the roots are z-plane
/// locations (origin roots represent pure delays/advances) and the gain is
/// the ratio of leading coefficients of the z-plane polynomials.
struct PoleZeroGain {
    std::vector<RootMult> zeros;
    std::vector<RootMult> poles;
    double gain = 1.0;
    Domain domain = Domain::ct_s;
};

struct PfeTerm {
    Complex pole;
    int multiplicity = 1;
    std::vector<Complex> coeffs;  // coeffs[k-1] weights 1/(s - pole)^k
};

struct PartialFractionExpansion {
    std::vector<PfeTerm> terms;
    Polynomial direct;  // polynomial part; zero for strictly proper inputs

    Complex operator()(const Complex& s) const;
};

/// Roots with multiplicities of a real-coefficient polynomial.
/// Durand-Kerner iteration with one Newton polish, cluster merging of
/// numerically split repeated roots, and exact conjugate symmetrization.
std::vector<RootMult> poly_roots(const Polynomial& p);

PoleZeroGain to_pzg(const RationalTF& tf);
RationalTF from_pzg(const PoleZeroGain& pzg);

RationalTF cascade(const std::vector<RationalTF>& stages);

/// Sum of transfer functions over the common denominator (no reduction).
RationalTF tf_add(const RationalTF& lhs, const RationalTF& rhs);
RationalTF tf_sub(const RationalTF& lhs, const RationalTF& rhs);

/// Cancels numerator/denominator root pairs that agree within root_tol.
RationalTF reduce(const RationalTF& tf);

PartialFractionExpansion partial_fractions(const RationalTF& tf);

bool is_proper(const RationalTF& tf);

Stability stability(const PoleZeroGain& pzg);
inline bool is_stable(const PoleZeroGain& pzg) { return stability(pzg) == Stability::stable; }

}  // namespace ltikit
