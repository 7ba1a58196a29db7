#include "hyperkit/amenability.hpp"

#include "hyperkit/errors.hpp"

#include <cmath>

namespace hyperkit {

namespace {

HFunction row(const FiniteHypergroup& h, const Grid& g, std::size_t x) { return HFunction(h, g[x]); }

HFunction column(const FiniteHypergroup& h, const Grid& g, std::size_t y) {
    std::vector<Complex> v(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) v[x] = g[x][y];
    return HFunction(h, std::move(v));
}

}  // namespace

Grid diagonal(const CharacterTable& table) {
    const auto& h = table.host();
    const std::size_t n = h.size();
    const double scale = 1.0 / (h.total_mass() * h.total_mass());
    Grid d(n, std::vector<Complex>(n));
    for (std::size_t i = 0; i < table.size(); ++i) {
        const double w = table.hyperdim()[i] * table.hyperdim()[i] * scale;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) d[x][y] += w * table.value(i, x) * table.value(i, y);
    }
    return d;
}

double amenability_constant(const CharacterTable& table) {
    const auto& h = table.host();
    const std::size_t n = h.size();
    const auto lambda = h.haar();
    double sum = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            Complex inner = 0.0;
            for (std::size_t i = 0; i < table.size(); ++i)
                inner += table.hyperdim()[i] * table.hyperdim()[i] * table.value(i, x) * std::conj(table.value(i, y));
            sum += std::abs(inner) * lambda[x] * lambda[y];
        }
    }
    return sum / (h.total_mass() * h.total_mass());
}

std::optional<Rational> exact_amenability_constant(const CharacterTable& table) {
    if (!table.exact()) return std::nullopt;
    const auto& h = table.host();
    const std::size_t n = h.size();
    const auto& lambda = h.exact_haar();
    Rational sum = 0;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            GaussianRational inner;
            for (std::size_t i = 0; i < table.size(); ++i) {
                const Rational& k = table.exact_hyperdim(i);
                inner += table.exact_value(i, x) * table.exact_value(i, y).conj() * (k * k);
            }
            if (!inner.is_real()) return std::nullopt;
            sum += abs(inner.re) * lambda[x] * lambda[y];
        }
    }
    Rational total = h.exact_total_mass();
    Rational am = sum / (total * total);
    am.canonicalize();
    return am;
}

AMReport amenability(const CharacterTable& table) {
    const auto& h = table.host();
    const std::size_t n = h.size();
    AMReport report;
    report.diagonal = diagonal(table);
    report.exact_am = exact_amenability_constant(table);
    report.am = report.exact_am ? report.exact_am->get_d() : amenability_constant(table);

    // m(Δ) = Σ_x 1_x * Δ(x, ·)
    HFunction multiplied = HFunction::zero(h);
    for (std::size_t x = 0; x < n; ++x)
        multiplied = multiplied + convolve(HFunction::point_mass(h, x), row(h, report.diagonal, x), Haar::unnormalized);

    for (std::size_t i = 0; i < table.size(); ++i) {
        const HFunction psi = table.as_function(i);
        report.residual_identity =
            std::max(report.residual_identity, max_abs_diff(convolve(multiplied, psi, Haar::unnormalized), psi));
        // (ψ·Δ)(x,y) = (ψ * Δ(·,y))(x); (Δ·ψ)(x,y) = (Δ(x,·) * ψ)(y)
        Grid left(n, std::vector<Complex>(n)), right(n, std::vector<Complex>(n));
        for (std::size_t y = 0; y < n; ++y) {
            const HFunction col = convolve(psi, column(h, report.diagonal, y), Haar::unnormalized);
            for (std::size_t x = 0; x < n; ++x) left[x][y] = col[x];
        }
        for (std::size_t x = 0; x < n; ++x) {
            const HFunction r = convolve(row(h, report.diagonal, x), psi, Haar::unnormalized);
            for (std::size_t y = 0; y < n; ++y) right[x][y] = r[y];
        }
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                report.residual_commute = std::max(report.residual_commute, std::abs(left[x][y] - right[x][y]));
    }
    return report;
}

HFunction diagonal_on_square(const CharacterTable& table, const FiniteHypergroup& square) {
    const std::size_t n = table.host().size();
    if (square.size() != n * n) throw DomainError("expected the product hypergroup H x H");
    const Grid d = diagonal(table);
    std::vector<Complex> v(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) v[x * n + y] = d[x][y];
    return HFunction(square, std::move(v));
}

double hp_parameter_for_amenability(double r, double tol) {
    if (!(r >= 1.0) || !(r < 5.0)) throw DomainError("AM(H_p) ranges over [1, 5)");
    auto am = [](double p) { return amenability_constant(characters(hp(p))); };
    double lo = 1.0, hi = 2.0;
    while (am(hi) < r) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e12) throw DomainError("target amenability constant too close to 5");
    }
    while (hi - lo > tol * std::max(1.0, lo)) {
        const double mid = 0.5 * (lo + hi);
        (am(mid) < r ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace hyperkit
