#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <string_view>

namespace hyperkit {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Parses "a/b", an integer, or a decimal ("0.125", "-2.5e-3") into an exact rational.
Rational parse_rational(std::string_view text);

/// Canonical text: "a/b" or "a" when the denominator is 1.
std::string to_string(const Rational& q);

/// Best rational approximation with denominator ≤ max_den, if it lies within tol of x.
std::optional<Rational> rationalize(double x, long max_den = 10'000'000, double tol = 1e-9);

/// Exact complex number with rational real and imaginary parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    [[nodiscard]] GaussianRational conj() const { return {re, -im}; }
    [[nodiscard]] Rational norm() const { return re * re + im * im; }
    [[nodiscard]] bool is_real() const { return sgn(im) == 0; }
    [[nodiscard]] Complex to_complex() const { return {re.get_d(), im.get_d()}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator*(const GaussianRational& a, const Rational& s) {
        return {a.re * s, a.im * s};
    }
    GaussianRational& operator+=(const GaussianRational& b) {
        re += b.re;
        im += b.im;
        return *this;
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

std::string to_string(const GaussianRational& z);

/// Rationalizes both parts of a complex value.
std::optional<GaussianRational> rationalize(Complex z);

}  // namespace hyperkit
