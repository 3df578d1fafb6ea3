#ifndef CAROUSEL_EXP_POLY_HPP
#define CAROUSEL_EXP_POLY_HPP

#include <complex>
#include <map>
#include <vector>

#include "polynomial.hpp"

namespace carousel {

/// Finite sum  sum_beta e^{beta s} p_beta(s)  with integer shifts beta.
/// Closed under addition, polynomial multiplication, reflection s -> -s and
/// differentiation, which is exactly what the transform right-hand side needs.
class ExpPoly {
public:
    ExpPoly() = default;
    static ExpPoly poly(Poly p) {
        ExpPoly e;
        e.set(0, std::move(p));
        return e;
    }
    static ExpPoly shifted(int beta, Poly p) {
        ExpPoly e;
        e.set(beta, std::move(p));
        return e;
    }

    const std::map<int, Poly>& parts() const { return parts_; }
    /// polynomial attached to e^{beta s} (zero polynomial when absent)
    Poly part(int beta) const;

    ExpPoly& operator+=(const ExpPoly& o);
    friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }

    ExpPoly times(const Poly& q) const;
    ExpPoly times(double v) const;
    ExpPoly shift(int beta) const;  // multiply by e^{beta s}
    ExpPoly reflected() const;      // s -> -s
    ExpPoly derivative() const;

    std::complex<double> eval(std::complex<double> s) const;
    /// evaluation scale at |s| (coefficient magnitudes times |e^{beta s}|)
    double eval_abs(std::complex<double> s) const;

private:
    std::map<int, Poly> parts_;
    void set(int beta, Poly p);
};

/// Expression  sum_j coeff_j(s) * x_j + constant(s)  that is linear in the
/// unknowns x_j, with ExpPoly-valued coefficients.
class LinearForm {
public:
    LinearForm(std::size_t unknowns) : coeffs_(unknowns) {}

    std::size_t size() const { return coeffs_.size(); }
    ExpPoly& coeff(std::size_t j) { return coeffs_[j]; }
    const ExpPoly& coeff(std::size_t j) const { return coeffs_[j]; }
    ExpPoly& constant() { return constant_; }
    const ExpPoly& constant() const { return constant_; }

    LinearForm& operator+=(const LinearForm& o);

    /// apply fn to every coefficient and the constant
    template <class Fn>
    LinearForm map(Fn&& fn) const {
        LinearForm out(coeffs_.size());
        for (std::size_t j = 0; j < coeffs_.size(); ++j) out.coeffs_[j] = fn(coeffs_[j]);
        out.constant_ = fn(constant_);
        return out;
    }

    struct Row {
        std::vector<std::complex<double>> coeffs;
        std::complex<double> constant;
        double scale;  // max coefficient evaluation scale, for relative residuals
    };
    Row eval(std::complex<double> s) const;

    /// collapse to a single ExpPoly by substituting unknown values
    ExpPoly substitute(const std::vector<double>& x) const;

private:
    std::vector<ExpPoly> coeffs_;
    ExpPoly constant_;
};

}  // namespace carousel

#endif
