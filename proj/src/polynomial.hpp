#ifndef CAROUSEL_POLYNOMIAL_HPP
#define CAROUSEL_POLYNOMIAL_HPP

#include <complex>
#include <vector>

namespace carousel {

/// Dense real polynomial, coefficients in ascending powers.
class Poly {
public:
    Poly() : c_{0.0} {}
    explicit Poly(std::vector<double> coeffs);
    static Poly constant(double v) { return Poly({v}); }
    static Poly monomial() { return Poly({0.0, 1.0}); }

    const std::vector<double>& coeffs() const { return c_; }
    int degree() const;  // -1 for the zero polynomial

    std::complex<double> eval(std::complex<double> s) const;
    double eval(double s) const;
    /// sum_k |c_k| |s|^k — the evaluation scale, used for relative residuals
    double eval_abs(double abs_s) const;

    Poly derivative() const;
    Poly reflected() const;  // p(-s)

    Poly& operator+=(const Poly& o);
    Poly& operator*=(double v);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator*(Poly a, double v) { return a *= v; }
    friend Poly operator*(const Poly& a, const Poly& b);

    bool is_zero() const { return degree() < 0; }
    double max_abs_coeff() const;

private:
    std::vector<double> c_;
    void trim();
};

/// (a + b s)^k expanded by the Pascal recurrence.
Poly binomial_power(double a, double b, int k);

}  // namespace carousel

#endif
