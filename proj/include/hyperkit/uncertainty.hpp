#pragma once

#include "hyperkit/characters.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hyperkit {

inline constexpr double kSupportTolerance = 1e-9;

/// λ(H) ≤ λ(supp f) · Σ_{χ ∈ supp f̂} k_χ d_χ for one function.
struct UncertaintyReport {
    double support_size = 0.0;   // λ(supp f)
    double dual_mass = 0.0;      // Σ_{χ ∈ supp f̂} k_χ d_χ
    double lhs = 0.0;            // λ(H)
    bool holds = false;
    double ratio = 0.0;          // support_size · dual_mass / lhs
    double supp_tolerance = kSupportTolerance;
    std::vector<std::size_t> support;
    std::vector<std::size_t> dual_support;
};

/// Supports are relative: |f(x)| > τ·max|f| and |f̂(χ)| > τ·max|f̂|.
/// Throws DomainError for the zero function.
UncertaintyReport uncertainty_check(const CharacterTable& table, const HFunction& f,
                                    double tau = kSupportTolerance);

struct ScanEntry {
    std::string description;
    double ratio = 0.0;
};

struct TightnessScan {
    ScanEntry best;
    /// One entry per subhypergroup indicator, in subhypergroups() order.
    std::vector<ScanEntry> subhypergroup_indicators;
    std::size_t evaluated = 0;
    /// Functions for which the inequality failed; empty when the bound holds throughout.
    std::vector<ScanEntry> violations;
};

/// Evaluates subhypergroup indicators, point masses, characters and `random_functions`
/// random sparse functions; reports the smallest ratio. Ties keep the earliest candidate.
TightnessScan tightness_scan(const CharacterTable& table, std::size_t random_functions = 256,
                             std::uint64_t seed = kDefaultSeed);

/// Seeded random function with a random nonempty support and Gaussian complex values.
HFunction random_sparse_function(const FiniteHypergroup& h, std::uint64_t& state);

}  // namespace hyperkit
