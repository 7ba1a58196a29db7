#include "hyperkit/rational.hpp"

#include "hyperkit/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace hyperkit {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Rational parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw StructuralError("not a number: '" + std::string(whole) + "'");
    mpz_class z(std::string(s), 10);
    return Rational(negative ? mpz_class(-z) : z);
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        Rational exp = parse_integer(s.substr(e + 1), whole);
        if (!mpz_fits_slong_p(exp.get_num_mpz_t()) || std::abs(exp.get_num().get_si()) > 4096)
            throw StructuralError("exponent out of range: '" + std::string(whole) + "'");
        exponent = exp.get_num().get_si();
        s = s.substr(0, e);
    }
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string digits;
    long fraction_digits = 0;
    bool seen_point = false;
    for (char c : s) {
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_point) ++fraction_digits;
        } else {
            throw StructuralError("not a number: '" + std::string(whole) + "'");
        }
    }
    if (digits.empty()) throw StructuralError("not a number: '" + std::string(whole) + "'");
    mpz_class mantissa(digits, 10);
    if (negative) mantissa = -mantissa;
    long scale = exponent - fraction_digits;
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(scale)));
    Rational q = scale >= 0 ? Rational(mantissa * power) : Rational(mantissa, power);
    q.canonicalize();
    return q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw StructuralError("empty number");
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Rational num = parse_integer(trim(s.substr(0, slash)), text);
        Rational den = parse_integer(trim(s.substr(slash + 1)), text);
        if (sgn(den) == 0) throw StructuralError("zero denominator: '" + std::string(text) + "'");
        Rational q = num / den;
        q.canonicalize();
        return q;
    }
    if (s.find_first_of(".eE") != std::string_view::npos) return parse_decimal(s, text);
    return parse_integer(s, text);
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_str();
}

std::optional<Rational> rationalize(double x, long max_den, double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    // Continued-fraction convergents h/k.
    mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
    mpz_class k_prev = 0, k = 1;
    double rest = x - std::floor(x);
    for (int step = 0; step < 64; ++step) {
        Rational candidate(h, k);
        if (std::abs(candidate.get_d() - x) <= tol) {
            candidate.canonicalize();
            return candidate;
        }
        if (rest < 1e-15) break;
        double inv = 1.0 / rest;
        double a = std::floor(inv);
        rest = inv - a;
        mpz_class ai = static_cast<long>(a);
        mpz_class h_next = ai * h + h_prev;
        mpz_class k_next = ai * k + k_prev;
        if (k_next > max_den) break;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    Rational candidate(h, k);
    if (std::abs(candidate.get_d() - x) <= tol) {
        candidate.canonicalize();
        return candidate;
    }
    return std::nullopt;
}

std::optional<GaussianRational> rationalize(Complex z) {
    auto re = rationalize(z.real());
    auto im = rationalize(z.imag());
    if (!re || !im) return std::nullopt;
    return GaussianRational(*re, *im);
}

std::string to_string(const GaussianRational& z) {
    if (z.is_real()) return to_string(z.re);
    std::string im = z.im == 1 ? "" : z.im == -1 ? "-" : to_string(z.im);
    if (sgn(z.re) == 0) return im + "i";
    if (sgn(z.im) > 0) im = "+" + im;
    return to_string(z.re) + im + "i";
}

}  // namespace hyperkit
