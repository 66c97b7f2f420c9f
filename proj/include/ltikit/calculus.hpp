#pragma once

#include <vector>

#include "ltikit/sequence.hpp"

namespace ltikit {

/// n-th backward difference with signed-binomial weights, divided by Ts^n.
/// The n leading samples have no full stencil and are dropped, so the output
/// is shorter by n and its origin index advances by n.
Sequence backward_difference(const Sequence& x, int order);

/// Rectangle accumulation sum_{k=p}^{q-1} x[k]*Ts over the index range [p, q).
double rect_integrate(const Sequence& x, std::size_t p, std::size_t q);

/// Trapezoid accumulation sum_{k=p+1}^{q} (x[k-1]+x[k])/2*Ts.
double trap_integrate(const Sequence& x, std::size_t p, std::size_t q);

enum class QuadRule { rectangle, trapezoid, backward_difference };

/// Analytic test signal with closed-form integrals and derivatives, used as
/// the independent oracle for convergence-order measurements.
struct TestSignal {
    enum class Kind { sine, exponential, polynomial };

    static TestSignal sine(double amplitude = 1.0, double omega = 1.0);
    static TestSignal exponential(double amplitude = 1.0, double rate = 1.0);
    static TestSignal polynomial(std::vector<double> coeffs);

    double value(double t) const;
    double integral(double a, double b) const;
    double derivative(double t, int order) const;

    Kind kind = Kind::sine;
    double amplitude = 1.0;
    double parameter = 1.0;        // omega for sine, rate for exponential
    std::vector<double> coeffs;    // polynomial only
};

struct ErrorOrderReport {
    std::vector<double> step_sizes;  // strictly decreasing
    std::vector<double> errors;      // max absolute error per step size
    double fitted_slope = 0.0;       // log-log least-squares slope
};

/// Measures the rule's error against the analytic oracle over [0, t_end]
/// for each step size and fits the convergence order.
ErrorOrderReport error_order(QuadRule rule, const TestSignal& signal,
                             const std::vector<double>& ts_list, double t_end,
                             int difference_order = 1);

}  // namespace ltikit
