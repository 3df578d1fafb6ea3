#include "exp_poly.hpp"

#include <cmath>
#include <stdexcept>

namespace carousel {

void ExpPoly::set(int beta, Poly p) {
    if (!p.is_zero()) parts_[beta] = std::move(p);
}

Poly ExpPoly::part(int beta) const {
    auto it = parts_.find(beta);
    return it == parts_.end() ? Poly() : it->second;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
    for (const auto& [b, p] : o.parts_) {
        auto it = parts_.find(b);
        if (it == parts_.end())
            parts_[b] = p;
        else {
            it->second += p;
            if (it->second.is_zero()) parts_.erase(it);
        }
    }
    return *this;
}

ExpPoly ExpPoly::times(const Poly& q) const {
    ExpPoly out;
    for (const auto& [b, p] : parts_) out.set(b, p * q);
    return out;
}

ExpPoly ExpPoly::times(double v) const {
    ExpPoly out;
    for (const auto& [b, p] : parts_) out.set(b, p * v);
    return out;
}

ExpPoly ExpPoly::shift(int beta) const {
    ExpPoly out;
    for (const auto& [b, p] : parts_) out.set(b + beta, p);
    return out;
}

ExpPoly ExpPoly::reflected() const {
    ExpPoly out;
    for (const auto& [b, p] : parts_) out.set(-b, p.reflected());
    return out;
}

ExpPoly ExpPoly::derivative() const {
    ExpPoly out;
    for (const auto& [b, p] : parts_) {
        Poly d = p.derivative();
        if (b != 0) d += p * static_cast<double>(b);
        out += ExpPoly::shifted(b, d);
    }
    return out;
}

std::complex<double> ExpPoly::eval(std::complex<double> s) const {
    std::complex<double> r = 0.0;
    for (const auto& [b, p] : parts_)
        r += std::exp(static_cast<double>(b) * s) * p.eval(s);
    return r;
}

double ExpPoly::eval_abs(std::complex<double> s) const {
    double r = 0.0;
    for (const auto& [b, p] : parts_)
        r += std::exp(static_cast<double>(b) * s.real()) * p.eval_abs(std::abs(s));
    return r;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
    if (o.coeffs_.size() != coeffs_.size())
        throw std::logic_error("LinearForm: size mismatch");
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    constant_ += o.constant_;
    return *this;
}

LinearForm::Row LinearForm::eval(std::complex<double> s) const {
    Row row;
    row.coeffs.reserve(coeffs_.size());
    row.scale = constant_.eval_abs(s);
    for (const auto& c : coeffs_) {
        row.coeffs.push_back(c.eval(s));
        row.scale = std::max(row.scale, c.eval_abs(s));
    }
    row.constant = constant_.eval(s);
    return row;
}

ExpPoly LinearForm::substitute(const std::vector<double>& x) const {
    if (x.size() != coeffs_.size())
        throw std::logic_error("LinearForm: unknown count mismatch");
    ExpPoly out = constant_;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) out += coeffs_[j].times(x[j]);
    return out;
}

}  // namespace carousel
