#include "ltikit/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ltikit/errors.hpp"

namespace ltikit {

namespace {

Complex eval_poly(const std::vector<Complex>& c, const Complex& x) {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Synthetic division by (x - r); returns quotient, drops the remainder.
std::vector<Complex> deflate(const std::vector<Complex>& c, const Complex& r) {
    std::vector<Complex> q(c.size() - 1);
    q.back() = c.back();
    for (int j = static_cast<int>(q.size()) - 2; j >= 0; --j)
        q[static_cast<std::size_t>(j)] =
            c[static_cast<std::size_t>(j) + 1] + r * q[static_cast<std::size_t>(j) + 1];
    return q;
}

// In-place Ruffini-Horner shift: returns coefficients in powers of (x - p).
std::vector<Complex> taylor_shift(std::vector<Complex> c, const Complex& p) {
    const int n = static_cast<int>(c.size());
    for (int i = 0; i < n - 1; ++i)
        for (int j = n - 2; j >= i; --j)
            c[static_cast<std::size_t>(j)] += p * c[static_cast<std::size_t>(j) + 1];
    return c;
}

// First n_terms coefficients of the power series num/den (den[0] != 0).
std::vector<Complex> series_div(const std::vector<Complex>& num,
                                const std::vector<Complex>& den, int n_terms) {
    std::vector<Complex> t(static_cast<std::size_t>(n_terms), Complex{0.0});
    for (int i = 0; i < n_terms; ++i) {
        Complex acc = i < static_cast<int>(num.size()) ? num[static_cast<std::size_t>(i)] : Complex{0.0};
        for (int j = 1; j <= i; ++j) {
            if (j < static_cast<int>(den.size()))
                acc -= den[static_cast<std::size_t>(j)] * t[static_cast<std::size_t>(i - j)];
        }
        t[static_cast<std::size_t>(i)] = acc / den[0];
    }
    return t;
}

struct RawRoot {
    Complex value;
    double residual_step;  // final Durand-Kerner correction magnitude
};

// Simultaneous Durand-Kerner iteration on the monic polynomial, with the
// variable rescaled by the Cauchy bound so the start points surround all
// roots. One Newton polish per root afterwards.
std::vector<RawRoot> durand_kerner(const std::vector<double>& coeffs) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    std::vector<Complex> monic(coeffs.begin(), coeffs.end());
    for (auto& c : monic) c /= coeffs.back();

    double bound = 0.0;
    for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(monic[static_cast<std::size_t>(k)]));
    const double scale = 1.0 + bound;

    // q(y) = p(scale*y)/scale^n keeps the rescaled roots inside the unit disc.
    std::vector<Complex> q(monic.size());
    for (int k = 0; k <= n; ++k)
        q[static_cast<std::size_t>(k)] = monic[static_cast<std::size_t>(k)] * std::pow(scale, k - n);

    std::vector<Complex> w(static_cast<std::size_t>(n));
    const Complex seed{0.4, 0.9};
    Complex acc = 1.0;
    for (int j = 0; j < n; ++j) {
        acc *= seed;
        w[static_cast<std::size_t>(j)] = acc;
    }

    int calm_sweeps = 0;
    for (int iter = 0; iter < 500 && calm_sweeps < 2; ++iter) {
        double worst = 0.0;
        for (int j = 0; j < n; ++j) {
            Complex denom = 1.0;
            for (int k = 0; k < n; ++k)
                if (k != j) denom *= w[static_cast<std::size_t>(j)] - w[static_cast<std::size_t>(k)];
            if (denom == Complex{0.0}) denom = Complex{1e-30, 0.0};
            const Complex delta = eval_poly(q, w[static_cast<std::size_t>(j)]) / denom;
            w[static_cast<std::size_t>(j)] -= delta;
            worst = std::max(worst, std::abs(delta) / (1.0 + std::abs(w[static_cast<std::size_t>(j)])));
        }
        calm_sweeps = worst < 1e-14 ? calm_sweeps + 1 : 0;
    }

    std::vector<Complex> dq(q.size() > 1 ? q.size() - 1 : 1, Complex{0.0});
    for (std::size_t k = 1; k < q.size(); ++k) dq[k - 1] = q[k] * static_cast<double>(k);
    for (int j = 0; j < n; ++j) {
        Complex& y = w[static_cast<std::size_t>(j)];
        const Complex dp = eval_poly(dq, y);
        if (std::abs(dp) > 1e-12) {
            const Complex newton = eval_poly(q, y) / dp;
            if (std::abs(newton) < 0.1) y -= newton;
        }
    }

    // fresh residual step per root: the radius at which the iteration can no
    // longer distinguish split copies of a repeated root
    std::vector<RawRoot> out(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        Complex denom = 1.0;
        for (int k = 0; k < n; ++k)
            if (k != j) denom *= w[static_cast<std::size_t>(j)] - w[static_cast<std::size_t>(k)];
        const double mag = std::max(std::abs(denom), 1e-300);
        const double rho = std::abs(eval_poly(q, w[static_cast<std::size_t>(j)])) / mag;
        out[static_cast<std::size_t>(j)] = {w[static_cast<std::size_t>(j)] * scale, rho * scale};
    }
    return out;
}

// k-th derivative of the real polynomial at c, together with the magnitude
// scale of its evaluation (sum of absolute term values); the scale bounds
// the rounding noise of the evaluation.
std::pair<Complex, double> derivative_with_scale(const std::vector<double>& coeffs, int k,
                                                 const Complex& c) {
    Complex value = 0.0;
    double scale = 0.0;
    const double mag = std::abs(c);
    for (int j = k; j < static_cast<int>(coeffs.size()); ++j) {
        double fall = 1.0;  // j!/(j-k)!
        for (int m = 0; m < k; ++m) fall *= static_cast<double>(j - m);
        const double cj = coeffs[static_cast<std::size_t>(j)] * fall;
        value = value + cj * std::pow(c, j - k);
        scale += std::abs(cj) * std::pow(mag, j - k);
    }
    return {value, scale};
}

// A candidate center is accepted as a root of multiplicity m when every
// lower-order derivative evaluates within rounding noise of zero.
bool confirms_multiplicity(const std::vector<double>& coeffs, const Complex& c, int m) {
    for (int k = 0; k < m; ++k) {
        const auto [value, scale] = derivative_with_scale(coeffs, k, c);
        if (std::abs(value) > 256.0 * 2.2e-16 * scale) return false;
    }
    return true;
}

std::vector<RootMult> cluster_roots(const std::vector<RawRoot>& raw,
                                    const std::vector<double>& coeffs) {
    const int n = static_cast<int>(raw.size());
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
        while (parent[static_cast<std::size_t>(i)] != i) i = parent[static_cast<std::size_t>(i)];
        return i;
    };

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double mag = std::max(std::abs(raw[static_cast<std::size_t>(i)].value),
                                        std::abs(raw[static_cast<std::size_t>(j)].value));
            const double tol = root_tol(mag) + 4.0 * (raw[static_cast<std::size_t>(i)].residual_step +
                                                      raw[static_cast<std::size_t>(j)].residual_step);
            if (std::abs(raw[static_cast<std::size_t>(i)].value - raw[static_cast<std::size_t>(j)].value) <= tol)
                parent[find(i)] = find(j);
        }
    }

    std::vector<RootMult> merged;
    for (int i = 0; i < n; ++i) {
        if (find(i) != i) continue;
        Complex sum = 0.0;
        int count = 0;
        for (int j = 0; j < n; ++j) {
            if (find(j) == i) {
                sum += raw[static_cast<std::size_t>(j)].value;
                ++count;
            }
        }
        merged.push_back({sum / static_cast<double>(count), count});
    }

    // second stage: numerically split repeated roots land further apart than
    // ROOT_TOL (about sqrt(eps) for doubles); merge wider candidates only
    // when the combined center verifies as a true multiple root
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < merged.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < merged.size() && !changed; ++j) {
                const double mag = std::max(std::abs(merged[i].value), std::abs(merged[j].value));
                if (std::abs(merged[i].value - merged[j].value) > 3e-5 * (1.0 + mag)) continue;
                const int m = merged[i].multiplicity + merged[j].multiplicity;
                Complex center = (merged[i].value * static_cast<double>(merged[i].multiplicity) +
                                  merged[j].value * static_cast<double>(merged[j].multiplicity)) /
                                 static_cast<double>(m);
                // an m-fold root is a simple root of p^(m-1): polish the
                // candidate there before judging the derivatives
                for (int it = 0; it < 5; ++it) {
                    const auto [num, ns] = derivative_with_scale(coeffs, m - 1, center);
                    const auto [den, ds] = derivative_with_scale(coeffs, m, center);
                    (void)ns;
                    (void)ds;
                    if (!(std::abs(den) > 0.0)) break;
                    const Complex step = num / den;
                    if (std::abs(step) > 1e-3 * (1.0 + std::abs(center))) break;
                    center -= step;
                    if (std::abs(step) < 1e-15 * (1.0 + std::abs(center))) break;
                }
                if (!confirms_multiplicity(coeffs, center, m)) continue;
                merged[i] = {center, m};
                merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(j));
                changed = true;
            }
        }
    }

    // refine multiple roots on the (m-1)-th derivative, where they are simple
    for (auto& r : merged) {
        if (r.multiplicity < 2) continue;
        const auto [num, num_scale] = derivative_with_scale(coeffs, r.multiplicity - 1, r.value);
        const auto [den, den_scale] = derivative_with_scale(coeffs, r.multiplicity, r.value);
        (void)num_scale;
        (void)den_scale;
        if (std::abs(den) > 0.0) {
            const Complex step = num / den;
            if (std::abs(step) < 1e-3 * (1.0 + std::abs(r.value))) r.value -= step;
        }
    }
    return merged;
}

void sort_roots(std::vector<RootMult>& roots) {
    std::sort(roots.begin(), roots.end(), [](const RootMult& a, const RootMult& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
}

// Snaps near-real roots onto the axis and rewrites complex roots as exact
// conjugate pairs (real-coefficient inputs only produce symmetric sets).
std::vector<RootMult> symmetrize(std::vector<RootMult> roots) {
    std::vector<RootMult> out;
    std::vector<RootMult> upper, lower;
    for (auto& r : roots) {
        if (std::abs(r.value.imag()) <= root_tol(std::abs(r.value))) {
            out.push_back({Complex{r.value.real(), 0.0}, r.multiplicity});
        } else if (r.value.imag() > 0.0) {
            upper.push_back(r);
        } else {
            lower.push_back(r);
        }
    }
    std::vector<bool> used(lower.size(), false);
    for (auto& u : upper) {
        int best = -1;
        double best_dist = std::numeric_limits<double>::max();
        for (std::size_t k = 0; k < lower.size(); ++k) {
            if (used[k]) continue;
            const double d = std::abs(std::conj(u.value) - lower[k].value);
            if (d < best_dist) {
                best_dist = d;
                best = static_cast<int>(k);
            }
        }
        if (best >= 0 && lower[static_cast<std::size_t>(best)].multiplicity == u.multiplicity) {
            used[static_cast<std::size_t>(best)] = true;
            const Complex mean = (u.value + std::conj(lower[static_cast<std::size_t>(best)].value)) * 0.5;
            out.push_back({mean, u.multiplicity});
            out.push_back({std::conj(mean), u.multiplicity});
        } else {
            out.push_back(u);  // no partner: leave untouched
        }
    }
    for (std::size_t k = 0; k < lower.size(); ++k)
        if (!used[k]) out.push_back(lower[k]);
    sort_roots(out);
    return out;
}

// Real expansion from a symmetrized root set: conjugate pairs contribute
// quadratic factors, so the result is real by construction.
Polynomial expand_real(const std::vector<RootMult>& roots, double lead) {
    Polynomial p{lead};
    std::vector<bool> done(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (done[i]) continue;
        const Complex r = roots[i].value;
        if (r.imag() == 0.0) {
            for (int m = 0; m < roots[i].multiplicity; ++m) p = p * Polynomial{-r.real(), 1.0};
            done[i] = true;
            continue;
        }
        // locate the exact conjugate partner
        std::size_t partner = roots.size();
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (j == i || done[j]) continue;
            if (roots[j].value == std::conj(r) && roots[j].multiplicity == roots[i].multiplicity) {
                partner = j;
                break;
            }
        }
        if (partner == roots.size())
            throw NonConjugateRoots("complex root without a matching conjugate partner");
        const double re2 = -2.0 * r.real();
        const double mag2 = std::norm(r);
        for (int m = 0; m < roots[i].multiplicity; ++m) p = p * Polynomial{mag2, re2, 1.0};
        done[i] = done[partner] = true;
    }
    return p;
}

void check_conjugate_symmetry(const std::vector<RootMult>& roots) {
    for (const auto& r : roots) {
        if (std::abs(r.value.imag()) <= root_tol(std::abs(r.value))) continue;
        bool found = false;
        for (const auto& c : roots) {
            if (c.multiplicity == r.multiplicity &&
                std::abs(c.value - std::conj(r.value)) <= root_tol(std::abs(r.value))) {
                found = true;
                break;
            }
        }
        if (!found)
            throw NonConjugateRoots("pole/zero set is not conjugate-symmetric");
    }
}

// Rewrites a root set so complex entries form exactly conjugate pairs.
std::vector<RootMult> snap_conjugates(std::vector<RootMult> roots) {
    check_conjugate_symmetry(roots);
    return symmetrize(std::move(roots));
}

// z-plane polynomial of a DT polynomial in z^-1: N(z) = z^L * num(z^-1).
Polynomial reversed_to_z(const Polynomial& p, int common_degree) {
    std::vector<double> c(static_cast<std::size_t>(common_degree) + 1, 0.0);
    const auto& w = p.coeffs();
    for (std::size_t j = 0; j < w.size(); ++j)
        c[static_cast<std::size_t>(common_degree) - j] = w[j];
    return Polynomial(std::move(c));
}

Polynomial z_to_zinv(const Polynomial& p, int common_degree) {
    std::vector<double> c(static_cast<std::size_t>(common_degree) + 1, 0.0);
    const auto& z = p.coeffs();
    for (std::size_t k = 0; k < z.size(); ++k)
        c[static_cast<std::size_t>(common_degree) - k] = z[k];
    return Polynomial(std::move(c));
}

}  // namespace

RationalTF::RationalTF(Polynomial numerator, Polynomial denominator, Domain dom)
    : num(std::move(numerator)), den(std::move(denominator)), domain(dom) {
    if (den.is_zero()) throw ZeroPolynomial("transfer function denominator is the zero polynomial");
}

Complex PartialFractionExpansion::operator()(const Complex& s) const {
    Complex acc = direct(s);
    for (const auto& term : terms) {
        const Complex d = s - term.pole;
        Complex pow = d;
        for (int k = 1; k <= term.multiplicity; ++k) {
            acc += term.coeffs[static_cast<std::size_t>(k - 1)] / pow;
            pow *= d;
        }
    }
    return acc;
}

std::vector<RootMult> poly_roots(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("cannot factor the zero polynomial");
    const int n = p.degree();
    if (n == 0) return {};
    const auto& c = p.coeffs();
    if (n == 1) {
        return {{Complex{-c[0] / c[1], 0.0}, 1}};
    }
    if (n == 2) {
        // cancellation-safe quadratic formula
        const double a = c[2], b = c[1], c0 = c[0];
        const double disc = b * b - 4.0 * a * c0;
        Complex r1, r2;
        if (disc < 0.0) {
            const double im = std::sqrt(-disc) / (2.0 * a);
            r1 = Complex{-b / (2.0 * a), im};
            r2 = std::conj(r1);
        } else {
            const double sq = std::sqrt(disc);
            const double q = -0.5 * (b + std::copysign(sq, b));
            if (q != 0.0) {
                r1 = Complex{q / a, 0.0};
                r2 = Complex{c0 / q, 0.0};
            } else {
                r1 = r2 = Complex{0.0};
            }
        }
        std::vector<RawRoot> raw{{r1, 0.0}, {r2, 0.0}};
        auto merged = cluster_roots(raw, c);
        return symmetrize(std::move(merged));
    }
    auto raw = durand_kerner(c);
    auto merged = cluster_roots(raw, c);
    return symmetrize(std::move(merged));
}

PoleZeroGain to_pzg(const RationalTF& tf) {
    PoleZeroGain out;
    out.domain = tf.domain;
    if (tf.domain == Domain::ct_s) {
        out.zeros = tf.num.is_zero() ? std::vector<RootMult>{} : poly_roots(tf.num);
        out.poles = poly_roots(tf.den);
        out.gain = tf.num.is_zero() ? 0.0 : tf.num.leading() / tf.den.leading();
        return out;
    }
    // DT: factor in the z plane so delays become origin roots.
    const int common = std::max(tf.num.degree(), tf.den.degree());
    const Polynomial num_z = reversed_to_z(tf.num, common);
    const Polynomial den_z = reversed_to_z(tf.den, common);
    out.zeros = num_z.is_zero() ? std::vector<RootMult>{} : poly_roots(num_z);
    out.poles = poly_roots(den_z);
    out.gain = num_z.is_zero() ? 0.0 : num_z.leading() / den_z.leading();
    return out;
}

RationalTF from_pzg(const PoleZeroGain& pzg) {
    const auto zeros = snap_conjugates(pzg.zeros);
    const auto poles = snap_conjugates(pzg.poles);
    if (pzg.domain == Domain::ct_s) {
        Polynomial num = expand_real(zeros, pzg.gain);
        Polynomial den = expand_real(poles, 1.0);
        return RationalTF(std::move(num), std::move(den), Domain::ct_s);
    }
    Polynomial num_z = expand_real(zeros, pzg.gain);
    Polynomial den_z = expand_real(poles, 1.0);
    const int common = std::max(num_z.degree(), den_z.degree());
    return RationalTF(z_to_zinv(num_z, common), z_to_zinv(den_z, common), Domain::dt_zinv);
}

RationalTF cascade(const std::vector<RationalTF>& stages) {
    if (stages.empty()) throw std::invalid_argument("cascade of zero stages");
    RationalTF acc = stages.front();
    for (std::size_t k = 1; k < stages.size(); ++k) {
        if (stages[k].domain != acc.domain)
            throw DomainMismatch("cascade stages live in different domains");
        acc = RationalTF(acc.num * stages[k].num, acc.den * stages[k].den, acc.domain);
    }
    return acc;
}

RationalTF tf_add(const RationalTF& lhs, const RationalTF& rhs) {
    if (lhs.domain != rhs.domain) throw DomainMismatch("sum of transfer functions across domains");
    return RationalTF(lhs.num * rhs.den + rhs.num * lhs.den, lhs.den * rhs.den, lhs.domain);
}

RationalTF tf_sub(const RationalTF& lhs, const RationalTF& rhs) {
    if (lhs.domain != rhs.domain) throw DomainMismatch("difference of transfer functions across domains");
    return RationalTF(lhs.num * rhs.den - rhs.num * lhs.den, lhs.den * rhs.den, lhs.domain);
}

RationalTF reduce(const RationalTF& tf) {
    PoleZeroGain pzg = to_pzg(tf);
    std::vector<RootMult> zeros = pzg.zeros;
    std::vector<RootMult> poles = pzg.poles;
    for (auto& z : zeros) {
        for (auto& p : poles) {
            if (z.multiplicity == 0 || p.multiplicity == 0) continue;
            if (std::abs(z.value - p.value) <= root_tol(std::abs(p.value))) {
                const int cancel = std::min(z.multiplicity, p.multiplicity);
                z.multiplicity -= cancel;
                p.multiplicity -= cancel;
            }
        }
    }
    auto strip = [](std::vector<RootMult>& v) {
        v.erase(std::remove_if(v.begin(), v.end(),
                               [](const RootMult& r) { return r.multiplicity == 0; }),
                v.end());
    };
    strip(zeros);
    strip(poles);
    pzg.zeros = std::move(zeros);
    pzg.poles = std::move(poles);
    return from_pzg(pzg);
}

PartialFractionExpansion partial_fractions(const RationalTF& tf) {
    if (tf.domain != Domain::ct_s)
        throw DomainMismatch("partial fractions are defined for CT transfer functions");
    if (!is_proper(tf)) throw ImproperTF("partial fractions require a proper transfer function");

    auto [quot, rem] = divmod(tf.num, tf.den);
    PartialFractionExpansion out;
    out.direct = quot;

    const auto poles = poly_roots(tf.den);
    const std::vector<Complex> den_c(tf.den.coeffs().begin(), tf.den.coeffs().end());
    const std::vector<Complex> rem_c(rem.coeffs().begin(), rem.coeffs().end());

    for (const auto& pole : poles) {
        std::vector<Complex> rest = den_c;
        for (int k = 0; k < pole.multiplicity; ++k) rest = deflate(rest, pole.value);

        const auto num_t = taylor_shift(rem_c, pole.value);
        const auto den_t = taylor_shift(rest, pole.value);
        const auto taylor = series_div(num_t, den_t, pole.multiplicity);

        PfeTerm term;
        term.pole = pole.value;
        term.multiplicity = pole.multiplicity;
        term.coeffs.resize(static_cast<std::size_t>(pole.multiplicity));
        for (int k = 1; k <= pole.multiplicity; ++k)
            term.coeffs[static_cast<std::size_t>(k - 1)] =
                taylor[static_cast<std::size_t>(pole.multiplicity - k)];
        out.terms.push_back(std::move(term));
    }

    // real poles carry real coefficients; conjugate poles carry conjugate ones
    for (auto& term : out.terms) {
        if (term.pole.imag() == 0.0) {
            for (auto& c : term.coeffs) c = Complex{c.real(), 0.0};
        }
    }
    for (auto& term : out.terms) {
        if (term.pole.imag() <= 0.0) continue;
        for (auto& other : out.terms) {
            if (other.pole == std::conj(term.pole) && other.multiplicity == term.multiplicity) {
                for (std::size_t k = 0; k < term.coeffs.size(); ++k)
                    other.coeffs[k] = std::conj(term.coeffs[k]);
            }
        }
    }
    return out;
}

bool is_proper(const RationalTF& tf) {
    return tf.num.degree() <= tf.den.degree();
}

Stability stability(const PoleZeroGain& pzg) {
    bool marginal = false;
    for (const auto& p : pzg.poles) {
        const double crit = pzg.domain == Domain::ct_s ? p.value.real() : std::abs(p.value) - 1.0;
        if (crit > kStabTol) return Stability::unstable;
        if (crit >= -kStabTol) marginal = true;
    }
    return marginal ? Stability::marginal : Stability::stable;
}

}  // namespace ltikit
