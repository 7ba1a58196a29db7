#pragma once

#include "hyperkit/builders.hpp"
#include "hyperkit/function.hpp"
#include "hyperkit/hypergroup.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace hyperkit {

inline constexpr std::uint64_t kDefaultSeed = 0x48594745;

/// Characters of a commutative finite hypergroup, one row per character.
///
/// Row 0 is the trivial character; the rest are ordered by descending hyperdimension,
/// ties broken lexicographically on the values. When the host is exact and every value
/// turns out to be a Gaussian rational, the table is exact as well.
class CharacterTable {
public:
    [[nodiscard]] const FiniteHypergroup& host() const { return host_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] std::span<const Complex> character(std::size_t i) const { return values_.at(i); }
    [[nodiscard]] Complex value(std::size_t i, std::size_t x) const { return values_.at(i).at(x); }
    [[nodiscard]] HFunction as_function(std::size_t i) const;

    /// k_i = λ(H) / Σ_x |χ_i(x)|² λ(x).
    [[nodiscard]] const std::vector<double>& hyperdim() const { return hyperdim_; }
    /// Matrix degree of each representation; 1 throughout the commutative case.
    [[nodiscard]] const std::vector<int>& dim() const { return dim_; }
    /// Plancherel weight of each character, equal to its hyperdimension.
    [[nodiscard]] const std::vector<double>& plancherel() const { return hyperdim_; }
    [[nodiscard]] std::size_t trivial_index() const { return 0; }

    [[nodiscard]] bool exact() const { return !exact_values_.empty(); }
    [[nodiscard]] const GaussianRational& exact_value(std::size_t i, std::size_t x) const;
    [[nodiscard]] const Rational& exact_hyperdim(std::size_t i) const;

    /// max |Σ_z c[x][y][z] χ(z) - χ(x) χ(y)| over all characters and pairs.
    [[nodiscard]] double multiplicativity_residual() const { return residual_; }

private:
    friend CharacterTable characters(const FiniteHypergroup&, std::uint64_t);
    explicit CharacterTable(FiniteHypergroup host) : host_(std::move(host)) {}

    FiniteHypergroup host_;
    std::vector<std::vector<Complex>> values_;
    std::vector<double> hyperdim_;
    std::vector<int> dim_;
    std::vector<std::vector<GaussianRational>> exact_values_;
    std::vector<Rational> exact_hyperdim_;
    double residual_ = 0.0;
};

/// Computes all characters as common eigenvectors of the translation operators.
/// Throws UnsupportedError for noncommutative input and NumericalDegeneracyError when the
/// eigenvalues cannot be separated or the result fails the multiplicativity check.
CharacterTable characters(const FiniteHypergroup& h, std::uint64_t seed = kDefaultSeed);

/// f̂(χ_i) = (1/λ(H)) Σ_x f(x) conj(χ_i(x)) λ(x).
std::vector<Complex> fourier(const CharacterTable& table, const HFunction& f);

/// f(x) = Σ_i k_i f̂_i χ_i(x).
HFunction inverse_fourier(const CharacterTable& table, std::span<const Complex> coefficients);

/// A product χ_i·χ_j whose expansion has a coefficient that is not a probability weight.
struct DualObstruction {
    std::size_t i = 0, j = 0, k = 0;
    Complex coefficient;
    std::optional<Rational> exact;
};

struct DualResult {
    std::variant<FiniteHypergroup, DualObstruction> value;

    [[nodiscard]] bool is_hypergroup() const { return std::holds_alternative<FiniteHypergroup>(value); }
    [[nodiscard]] const FiniteHypergroup& dual() const { return std::get<FiniteHypergroup>(value); }
    [[nodiscard]] const DualObstruction& obstruction() const { return std::get<DualObstruction>(value); }
};

/// Expands χ_i·χ_j = Σ_k a_k χ_k. If every a_k is a nonnegative real the character set is a
/// hypergroup with identity the trivial character and involution χ ↦ conj χ, and its Haar
/// weights must equal the hyperdimensions (VerificationError otherwise).
DualResult dual_hypergroup(const CharacterTable& table);

/// p_i = (k_i/λ(H)) χ_i: orthogonal idempotents of ℓ¹(H, λ) summing to δ_e.
std::vector<HFunction> minimal_idempotents(const CharacterTable& table);

struct CharacterMatch {
    std::size_t character = 0;          // row in the target table
    std::string origin;                 // "K", "J", or "H"
    std::size_t source = 0;             // row in the origin's table
    double hyperdim = 0.0;              // measured
    double expected = 0.0;              // predicted by the correspondence
};

struct DualVerification {
    bool passed = true;
    std::vector<CharacterMatch> matches;
    std::vector<std::string> failures;
    double max_error = 0.0;
};

/// Matches every character of K ∨ J with an extension of a nontrivial character of K
/// (vanishing on J∖{e}, k scaled by λ_J(J)) or of a character of J (constant 1 on K, k kept).
DualVerification verify_join_dual(const FiniteHypergroup& k, const FiniteHypergroup& j,
                                  const JoinedHypergroup& joined, std::uint64_t seed = kDefaultSeed);

/// Characters trivial on K are constant on cosets, descend bijectively onto the characters
/// of H/K, and keep their hyperdimension.
DualVerification verify_quotient_dual(const FiniteHypergroup& h, const std::vector<std::size_t>& subgroup,
                                      std::uint64_t seed = kDefaultSeed);

}  // namespace hyperkit
