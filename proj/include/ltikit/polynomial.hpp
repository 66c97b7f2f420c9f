#pragma once

#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

namespace ltikit {

using Complex = std::complex<double>;

/// Real-coefficient polynomial, coefficients stored in ascending powers:
/// coeffs()[k] multiplies the k-th power of the variable. Trailing zero
/// coefficients are normalized away; the zero polynomial is stored as {0}.
class Polynomial {
public:
    Polynomial() : coeffs_{0.0} {}
    Polynomial(std::initializer_list<double> c) : Polynomial(std::vector<double>(c)) {}
    explicit Polynomial(std::vector<double> c);

    static Polynomial monomial(int power, double coeff = 1.0);

    const std::vector<double>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
    double leading() const { return coeffs_.back(); }

    double operator()(double x) const;
    Complex operator()(const Complex& x) const;

    Polynomial derivative() const;

    Polynomial operator-() const;
    bool operator==(const Polynomial&) const = default;

private:
    std::vector<double> coeffs_;
};

Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs);
Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs);
Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
Polynomial operator*(const Polynomial& p, double s);
Polynomial operator*(double s, const Polynomial& p);

/// Long division: returns {quotient, remainder} with num = quotient*den + remainder.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

}  // namespace ltikit
