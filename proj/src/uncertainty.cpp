#include "hyperkit/uncertainty.hpp"

#include "hyperkit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hyperkit {

UncertaintyReport uncertainty_check(const CharacterTable& table, const HFunction& f, double tau) {
    const double peak = f.max_abs();
    if (peak == 0.0) throw DomainError("the uncertainty inequality needs a nonzero function");
    const auto& h = table.host();
    const auto lambda = h.haar();
    const std::vector<Complex> coefficients = fourier(table, f);
    double dual_peak = 0.0;
    for (auto c : coefficients) dual_peak = std::max(dual_peak, std::abs(c));

    UncertaintyReport r;
    r.supp_tolerance = tau;
    r.lhs = h.total_mass();
    for (std::size_t x = 0; x < h.size(); ++x) {
        if (std::abs(f[x]) > tau * peak) {
            r.support.push_back(x);
            r.support_size += lambda[x];
        }
    }
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (std::abs(coefficients[i]) > tau * dual_peak) {
            r.dual_support.push_back(i);
            r.dual_mass += table.hyperdim()[i] * table.dim()[i];
        }
    }
    const double rhs = r.support_size * r.dual_mass;
    r.ratio = rhs / r.lhs;
    r.holds = r.lhs <= rhs * (1.0 + 1e-12);
    return r;
}

HFunction random_sparse_function(const FiniteHypergroup& h, std::uint64_t& state) {
    std::mt19937_64 rng(state);
    state = rng();
    const std::size_t n = h.size();
    std::uniform_int_distribution<std::size_t> count(1, n);
    std::normal_distribution<double> gauss;
    std::vector<std::size_t> positions(n);
    for (std::size_t i = 0; i < n; ++i) positions[i] = i;
    std::shuffle(positions.begin(), positions.end(), rng);
    positions.resize(count(rng));
    std::vector<Complex> values(n);
    for (std::size_t x : positions) {
        do values[x] = Complex(gauss(rng), gauss(rng));
        while (values[x] == Complex(0.0));
    }
    return HFunction(h, std::move(values));
}

TightnessScan tightness_scan(const CharacterTable& table, std::size_t random_functions, std::uint64_t seed) {
    const auto& h = table.host();
    TightnessScan scan;
    scan.best.ratio = INFINITY;
    auto consider = [&](const HFunction& f, std::string description) {
        const UncertaintyReport r = uncertainty_check(table, f);
        ++scan.evaluated;
        if (!r.holds) scan.violations.push_back({description, r.ratio});
        if (r.ratio < scan.best.ratio - 1e-12) scan.best = {std::move(description), r.ratio};
        return r.ratio;
    };

    for (const auto& subset : subhypergroups(h)) {
        std::vector<Complex> v(h.size());
        std::string description = "indicator of {";
        for (std::size_t i = 0; i < subset.size(); ++i) {
            v[subset[i]] = 1.0;
            description += (i ? "," : "") + h.label(subset[i]);
        }
        description += "}";
        const double ratio = consider(HFunction(h, std::move(v)), description);
        scan.subhypergroup_indicators.push_back({std::move(description), ratio});
    }
    for (std::size_t x = 0; x < h.size(); ++x) consider(HFunction::point_mass(h, x), "point mass at " + h.label(x));
    for (std::size_t i = 0; i < table.size(); ++i) consider(table.as_function(i), "character chi" + std::to_string(i));
    std::uint64_t state = seed;
    for (std::size_t k = 0; k < random_functions; ++k)
        consider(random_sparse_function(h, state), "random function #" + std::to_string(k));
    return scan;
}

}  // namespace hyperkit
