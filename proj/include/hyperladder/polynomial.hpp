#pragma once

#include "hyperladder/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace hyperladder {

/// Dense univariate polynomial with exact rational coefficients, lowest degree first.
///
/// The coefficient vector never carries trailing zeros, so the zero polynomial
/// has no coefficients and degree() == -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, int degree);
    /// The polynomial `s`.
    static Polynomial identity();

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Coefficient of s^k; zero past the degree.
    Rational coeff(int k) const;
    Rational leading() const;

    Polynomial derivative(int order = 1) const;

    Rational operator()(const Rational& s) const;
    double evaluate(double s) const;
    /// Evaluates at a double point using exact arithmetic, rounding only the result.
    double evaluate_exact(double s) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    Polynomial pow(unsigned exponent) const;

    /// Exact division with remainder; throws DomainError on a zero divisor.
    struct DivResult;
    DivResult divide(const Polynomial& divisor) const;

    std::string to_string(const char* var = "s") const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

struct Polynomial::DivResult {
    Polynomial quotient;
    Polynomial remainder;
};

}  // namespace hyperladder
