#pragma once

#include "hyperkit/rational.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hyperkit {

enum class Arithmetic { exact, floating };

/// Absolute tolerance for axiom checks in floating mode.
inline constexpr double kFloatTolerance = 1e-10;

/// One nonzero coefficient of δ_x * δ_y: the mass placed on `element`.
/// In exact mode `exact` is authoritative and `value` is its double image.
struct Term {
    std::size_t element = 0;
    Rational exact;
    double value = 0.0;
};

/// Unvalidated hypergroup data. Structure constants are stored sparsely per ordered pair.
class RawHypergroup {
public:
    RawHypergroup() = default;
    RawHypergroup(std::string name, std::vector<std::string> labels, std::size_t identity,
                  std::vector<std::size_t> involution, Arithmetic arithmetic);

    /// Adds c to the coefficient of δ_z in δ_x * δ_y.
    void add(std::size_t x, std::size_t y, std::size_t z, const Rational& c);
    void add(std::size_t x, std::size_t y, std::size_t z, double c);

    [[nodiscard]] std::size_t size() const { return labels.size(); }
    [[nodiscard]] const std::vector<Term>& product(std::size_t x, std::size_t y) const {
        return products.at(x * size() + y);
    }

    std::string name;
    std::vector<std::string> labels;
    std::size_t identity = 0;
    std::vector<std::size_t> involution;
    Arithmetic arithmetic = Arithmetic::exact;
    /// products[x * n + y], sorted by element, no duplicates, no exact zeros.
    std::vector<std::vector<Term>> products;

private:
    Term& slot(std::size_t x, std::size_t y, std::size_t z);
};

struct Violation {
    std::string axiom;
    std::vector<std::size_t> indices;
    double residual = 0.0;
};

struct ValidationReport {
    bool passed = true;
    std::vector<Violation> violations;
    /// Violations found beyond the per-axiom listing cap.
    std::size_t omitted = 0;
    /// Largest associativity defect seen (0 in exact mode when associative).
    double associativity_residual = 0.0;

    [[nodiscard]] std::string summary() const;
};

/// Checks every hypergroup axiom. Throws StructuralError when the data is not even
/// shaped like a hypergroup (wrong sizes, indices out of range, non-finite entries).
ValidationReport validate(const RawHypergroup& raw);

/// A validated finite hypergroup. Immutable; copies share storage.
class FiniteHypergroup {
public:
    /// Validates and builds. Throws VerificationError listing violations on failure.
    static FiniteHypergroup create(RawHypergroup raw);

    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] const std::string& name() const;
    [[nodiscard]] const std::vector<std::string>& labels() const;
    [[nodiscard]] const std::string& label(std::size_t x) const;
    [[nodiscard]] std::optional<std::size_t> index_of(const std::string& label) const;
    [[nodiscard]] std::size_t identity() const;
    [[nodiscard]] std::size_t involution(std::size_t x) const;
    [[nodiscard]] Arithmetic arithmetic() const;
    [[nodiscard]] bool exact() const { return arithmetic() == Arithmetic::exact; }
    [[nodiscard]] bool commutative() const;

    [[nodiscard]] std::span<const Term> product(std::size_t x, std::size_t y) const;
    [[nodiscard]] double constant(std::size_t x, std::size_t y, std::size_t z) const;
    [[nodiscard]] Rational exact_constant(std::size_t x, std::size_t y, std::size_t z) const;

    /// λ(x) = 1 / c[x̃][x][e].
    [[nodiscard]] std::span<const double> haar() const;
    [[nodiscard]] const std::vector<Rational>& exact_haar() const;
    [[nodiscard]] double total_mass() const;
    [[nodiscard]] const Rational& exact_total_mass() const;

    [[nodiscard]] const RawHypergroup& raw() const;

    /// True when both handles refer to the same constructed object.
    [[nodiscard]] bool same_as(const FiniteHypergroup& other) const { return impl_ == other.impl_; }

private:
    struct Impl;
    explicit FiniteHypergroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

std::span<const double> haar(const FiniteHypergroup& h);

/// λ ≡ 1, equivalently every δ_x * δ_y is a point mass.
bool is_group(const FiniteHypergroup& h);

/// Largest entrywise difference between the two tensors, or nullopt if shapes differ.
std::optional<double> tensor_distance(const FiniteHypergroup& a, const FiniteHypergroup& b,
                                      std::span<const std::size_t> relabel = {});

}  // namespace hyperkit
