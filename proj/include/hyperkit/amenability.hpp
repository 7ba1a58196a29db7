#pragma once

#include "hyperkit/characters.hpp"

#include <optional>
#include <vector>

namespace hyperkit {

/// Dense n×n array indexed [x][y].
using Grid = std::vector<std::vector<Complex>>;

struct AMReport {
    double am = 0.0;
    /// Present when the character table is exact and the diagonal is real.
    std::optional<Rational> exact_am;
    Grid diagonal;
    /// max over characters ψ of |m(Δ) * ψ - ψ|.
    double residual_identity = 0.0;
    /// max over characters ψ of |ψ·Δ - Δ·ψ|.
    double residual_commute = 0.0;
};

/// Δ(x,y) = λ(H)^-2 Σ_i k_i² χ_i(x) χ_i(y), the diagonal of ℓ¹(H, λ).
Grid diagonal(const CharacterTable& table);

/// AM = λ(H)^-2 Σ_{x,y} |Σ_i k_i² χ_i(x) conj χ_i(y)| λ(x) λ(y).
double amenability_constant(const CharacterTable& table);
std::optional<Rational> exact_amenability_constant(const CharacterTable& table);

AMReport amenability(const CharacterTable& table);

/// Δ as a function on `square`, which must be product(h, h) for the table's host.
HFunction diagonal_on_square(const CharacterTable& table, const FiniteHypergroup& square);

/// Finds p with AM(ℓ¹(H_p)) = r by bisection; r must lie in [1, 5).
double hp_parameter_for_amenability(double r, double tol = 1e-12);

}  // namespace hyperkit
