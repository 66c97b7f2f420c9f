#include "ltikit/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ltikit/errors.hpp"

namespace ltikit {

namespace {

void normalize(std::vector<double>& c) {
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
    if (c.empty()) c.push_back(0.0);
}

}  // namespace

Polynomial::Polynomial(std::vector<double> c) : coeffs_(std::move(c)) {
    for (double v : coeffs_) {
        if (!std::isfinite(v)) throw std::invalid_argument("polynomial coefficient not finite");
    }
    normalize(coeffs_);
}

Polynomial Polynomial::monomial(int power, double coeff) {
    if (power < 0) throw std::invalid_argument("monomial power must be non-negative");
    std::vector<double> c(static_cast<std::size_t>(power) + 1, 0.0);
    c.back() = coeff;
    return Polynomial(std::move(c));
}

double Polynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Complex Polynomial::operator()(const Complex& x) const {
    Complex acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() == 1) return Polynomial{};
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<double>(k);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator-() const {
    std::vector<double> c(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] = -coeffs_[k];
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs) {
    const auto& a = lhs.coeffs();
    const auto& b = rhs.coeffs();
    std::vector<double> c(std::max(a.size(), b.size()), 0.0);
    for (std::size_t k = 0; k < a.size(); ++k) c[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) c[k] += b[k];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs) {
    return lhs + (-rhs);
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Polynomial{};
    const auto& a = lhs.coeffs();
    const auto& b = rhs.coeffs();
    std::vector<double> c(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& p, double s) {
    std::vector<double> c(p.coeffs());
    for (double& v : c) v *= s;
    return Polynomial(std::move(c));
}

Polynomial operator*(double s, const Polynomial& p) { return p * s; }

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw ZeroPolynomial("polynomial division by the zero polynomial");
    if (num.degree() < den.degree()) return {Polynomial{}, num};

    std::vector<double> rem = num.coeffs();
    const auto& d = den.coeffs();
    const int dq = num.degree() - den.degree();
    std::vector<double> quot(static_cast<std::size_t>(dq) + 1, 0.0);
    for (int k = dq; k >= 0; --k) {
        const double f = rem[static_cast<std::size_t>(k) + d.size() - 1] / d.back();
        quot[static_cast<std::size_t>(k)] = f;
        for (std::size_t j = 0; j < d.size(); ++j)
            rem[static_cast<std::size_t>(k) + j] -= f * d[j];
    }
    rem.resize(d.size() - 1 > 0 ? d.size() - 1 : 1);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

}  // namespace ltikit
