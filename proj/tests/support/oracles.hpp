#pragma once

#include "hyperkit/groups.hpp"
#include "hyperkit/hypergroup.hpp"
#include "hyperkit/rational.hpp"

#include <cstddef>
#include <vector>

namespace oracle {

using hyperkit::Complex;
using hyperkit::Rational;

/// Conjugacy classes found by direct orbit enumeration; identity class first, then by smallest member.
std::vector<std::vector<std::size_t>> classes(const hyperkit::CayleyTable& g);

/// c[i][j][k] = #{(a, b) in C_i x C_j : ab in C_k} / (|C_i| |C_j|).
std::vector<std::vector<std::vector<Rational>>> class_products(const hyperkit::CayleyTable& g);

/// Irreducible characters of G read off the regular representation of the class sums.
struct GroupIrreps {
    std::vector<std::vector<std::size_t>> classes;
    std::vector<int> degree;                   // d_pi, from the multiplicity d_pi^2 of each eigenvalue
    std::vector<std::vector<Complex>> chi;     // chi_pi on each class (unnormalized)
};
GroupIrreps group_irreps(const hyperkit::CayleyTable& g);

/// l1 norm of the diagonal of the centre of l1(G), built from central idempotents on G x G.
double center_amenability(const hyperkit::CayleyTable& g);

/// The diagonal as the solution of its defining linear conditions, written with measures on H x H.
struct DiagonalSolve {
    std::size_t unknowns = 0;
    std::size_t rank = 0;
    std::vector<std::vector<double>> density;  // Δ(x, y)
    double norm = 0.0;                          // Σ |Δ(x,y)| λ(x) λ(y)
    double residual = 0.0;
};
DiagonalSolve solve_diagonal(const hyperkit::FiniteHypergroup& h);

/// Closed forms for the two-element family.
inline Rational hp_amenability(const Rational& p) {
    Rational r = (5 * p * p - 2 * p + 1) / ((p + 1) * (p + 1));
    r.canonicalize();
    return r;
}

}  // namespace oracle
