#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hyperkit {

/// Multiplication table of a finite group; product(i, j) is the index of g_i·g_j.
class CayleyTable {
public:
    /// Validates the table (Latin square, identity, associativity) and finds the identity.
    /// Throws StructuralError on failure. Labels default to "0".."n-1".
    static CayleyTable create(std::vector<std::vector<std::size_t>> product,
                              std::vector<std::string> labels = {}, std::string name = "G");

    [[nodiscard]] std::size_t order() const { return product_.size(); }
    [[nodiscard]] std::size_t identity() const { return identity_; }
    [[nodiscard]] std::size_t multiply(std::size_t a, std::size_t b) const { return product_[a][b]; }
    [[nodiscard]] std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] const std::vector<std::vector<std::size_t>>& table() const { return product_; }
    [[nodiscard]] bool abelian() const;

private:
    CayleyTable() = default;
    std::vector<std::vector<std::size_t>> product_;
    std::vector<std::size_t> inverse_;
    std::vector<std::string> labels_;
    std::string name_;
    std::size_t identity_ = 0;
};

/// Conjugacy classes, identity class first, remaining classes ordered by smallest member.
struct ConjClassPartition {
    std::vector<std::vector<std::size_t>> classes;
    /// class_of[g] is the index of g's class.
    std::vector<std::size_t> class_of;

    [[nodiscard]] std::size_t size(std::size_t c) const { return classes[c].size(); }
};

ConjClassPartition conjugacy_classes(const CayleyTable& group);

namespace groups {

CayleyTable cyclic(std::size_t n);
/// Symmetries of the regular n-gon, order 2n.
CayleyTable dihedral(std::size_t n);
/// Permutations of {0..n-1} in lexicographic one-line order; n ≤ 5.
CayleyTable symmetric(std::size_t n);
CayleyTable quaternion();

}  // namespace groups

}  // namespace hyperkit
