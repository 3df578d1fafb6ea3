#include "polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace carousel {

Poly::Poly(std::vector<double> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(0.0);
    trim();
}

void Poly::trim() {
    while (c_.size() > 1 && c_.back() == 0.0) c_.pop_back();
}

int Poly::degree() const {
    if (c_.size() == 1 && c_[0] == 0.0) return -1;
    return static_cast<int>(c_.size()) - 1;
}

std::complex<double> Poly::eval(std::complex<double> s) const {
    std::complex<double> r = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * s + *it;
    return r;
}

double Poly::eval(double s) const {
    double r = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * s + *it;
    return r;
}

double Poly::eval_abs(double abs_s) const {
    double r = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * abs_s + std::abs(*it);
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<double> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<double>(k);
    return Poly(std::move(d));
}

Poly Poly::reflected() const {
    std::vector<double> d = c_;
    for (std::size_t k = 1; k < d.size(); k += 2) d[k] = -d[k];
    return Poly(std::move(d));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(double v) {
    for (double& x : c_) x *= v;
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<double> d(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0.0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(d));
}

double Poly::max_abs_coeff() const {
    double m = 0.0;
    for (double x : c_) m = std::max(m, std::abs(x));
    return m;
}

Poly binomial_power(double a, double b, int k) {
    if (k < 0) throw std::invalid_argument("binomial_power: negative exponent");
    std::vector<double> c{1.0};
    for (int i = 0; i < k; ++i) {
        std::vector<double> n(c.size() + 1, 0.0);
        for (std::size_t j = 0; j < c.size(); ++j) {
            n[j] += a * c[j];
            n[j + 1] += b * c[j];
        }
        c = std::move(n);
    }
    return Poly(std::move(c));
}

}  // namespace carousel
