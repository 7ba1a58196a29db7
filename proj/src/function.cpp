#include "hyperkit/function.hpp"

#include "hyperkit/errors.hpp"

#include <algorithm>
#include <cmath>

namespace hyperkit {

namespace {

void require_same_host(const HFunction& f, const HFunction& g) {
    if (!f.host().same_as(g.host()))
        throw DomainError("functions live on different hypergroups ('" + f.host().name() + "' vs '" +
                          g.host().name() + "')");
}

}  // namespace

HFunction::HFunction(FiniteHypergroup host, std::vector<Complex> values)
    : host_(std::move(host)), values_(std::move(values)) {
    if (values_.size() != host_.size())
        throw StructuralError("function has " + std::to_string(values_.size()) + " values but '" +
                              host_.name() + "' has " + std::to_string(host_.size()) + " elements");
}

HFunction HFunction::zero(const FiniteHypergroup& host) {
    return HFunction(host, std::vector<Complex>(host.size()));
}

HFunction HFunction::constant(const FiniteHypergroup& host, Complex value) {
    return HFunction(host, std::vector<Complex>(host.size(), value));
}

HFunction HFunction::point_mass(const FiniteHypergroup& host, std::size_t x) {
    std::vector<Complex> v(host.size());
    v.at(x) = 1.0;
    return HFunction(host, std::move(v));
}

HFunction HFunction::scaled(Complex s) const {
    std::vector<Complex> v(values_);
    for (auto& z : v) z *= s;
    return HFunction(host_, std::move(v));
}

bool HFunction::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](Complex z) { return z == Complex(0.0); });
}

double HFunction::max_abs() const {
    double m = 0.0;
    for (auto z : values_) m = std::max(m, std::abs(z));
    return m;
}

HFunction operator+(const HFunction& a, const HFunction& b) {
    require_same_host(a, b);
    std::vector<Complex> v(a.values_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values_[i];
    return HFunction(a.host_, std::move(v));
}

HFunction operator-(const HFunction& a, const HFunction& b) {
    require_same_host(a, b);
    std::vector<Complex> v(a.values_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.values_[i];
    return HFunction(a.host_, std::move(v));
}

double max_abs_diff(const HFunction& f, const HFunction& g) {
    require_same_host(f, g);
    double m = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f[i] - g[i]));
    return m;
}

HFunction convolve(const HFunction& f, const HFunction& g, Haar haar) {
    require_same_host(f, g);
    const FiniteHypergroup& h = f.host();
    const std::size_t n = h.size();
    const auto lambda = h.haar();
    const double weight = haar == Haar::normalized ? 1.0 / h.total_mass() : 1.0;
    std::vector<Complex> out(n);
    for (std::size_t y = 0; y < n; ++y) {
        if (f[y] == Complex(0.0)) continue;
        const Complex fy = f[y] * lambda[y] * weight;
        const std::size_t yt = h.involution(y);
        for (std::size_t x = 0; x < n; ++x) {
            Complex translated = 0.0;
            for (const auto& t : h.product(yt, x)) translated += t.value * g[t.element];
            out[x] += fy * translated;
        }
    }
    return HFunction(h, std::move(out));
}

}  // namespace hyperkit
