#pragma once

#include "hyperkit/hypergroup.hpp"

#include <span>
#include <vector>

namespace hyperkit {

/// A complex-valued function on the elements of a hypergroup.
class HFunction {
public:
    HFunction(FiniteHypergroup host, std::vector<Complex> values);

    static HFunction zero(const FiniteHypergroup& host);
    static HFunction constant(const FiniteHypergroup& host, Complex value);
    static HFunction point_mass(const FiniteHypergroup& host, std::size_t x);

    [[nodiscard]] const FiniteHypergroup& host() const { return host_; }
    [[nodiscard]] std::span<const Complex> values() const { return values_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] Complex operator[](std::size_t x) const { return values_[x]; }

    [[nodiscard]] HFunction scaled(Complex s) const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] double max_abs() const;

    friend HFunction operator+(const HFunction& a, const HFunction& b);
    friend HFunction operator-(const HFunction& a, const HFunction& b);

private:
    FiniteHypergroup host_;
    std::vector<Complex> values_;
};

/// Largest |f(x) - g(x)|. Hosts must match.
double max_abs_diff(const HFunction& f, const HFunction& g);

/// Which Haar weight the convolution integrates against.
enum class Haar {
    /// λ/λ(H): compact-hypergroup conventions, identity is λ(H)·δ_e.
    normalized,
    /// λ with λ(e) = 1: the algebra ℓ¹(H, λ), identity is δ_e.
    unnormalized,
};

/// (f*g)(x) = w Σ_y f(y) λ(y) Σ_z c[ỹ][x][z] g(z), with w = 1/λ(H) (normalized) or 1.
HFunction convolve(const HFunction& f, const HFunction& g, Haar haar = Haar::normalized);

}  // namespace hyperkit
