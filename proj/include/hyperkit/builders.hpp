#pragma once

#include "hyperkit/groups.hpp"
#include "hyperkit/hypergroup.hpp"

#include <vector>

namespace hyperkit {

/// G as a hypergroup: δ_x * δ_y = δ_{xy}, involution = inverse.
FiniteHypergroup group_hypergroup(const CayleyTable& group);

/// Conj(G): c[C][D][E] = |{(a,b) ∈ C×D : ab ∈ E}| / (|C||D|). Haar weight is the class size.
FiniteHypergroup conjugacy_hypergroup(const CayleyTable& group);

/// H_p = {e, a} with δ_a * δ_a = (1/p) δ_e + (1 - 1/p) δ_a. Throws DomainError for p < 1.
FiniteHypergroup hp(const Rational& p);
FiniteHypergroup hp(double p);

/// A join together with where the operands' elements landed.
struct JoinedHypergroup {
    FiniteHypergroup hypergroup;
    /// Index in the join of each element of K (identity included).
    std::vector<std::size_t> from_k;
    /// Index in the join of each element of J; J's identity maps to the shared identity.
    std::vector<std::size_t> from_j;
};

/// K ∨ J. Elements are K's in order, then J∖{e_J}. Colliding J labels get a "J:" prefix.
JoinedHypergroup join(const FiniteHypergroup& k, const FiniteHypergroup& j);

/// e ∈ S, S closed under the involution and supp(δ_x * δ_y) ⊆ S for x, y ∈ S.
bool is_subhypergroup(const FiniteHypergroup& h, const std::vector<std::size_t>& subset);

struct QuotientHypergroup {
    FiniteHypergroup hypergroup;
    /// projection[x] = index of the coset xK.
    std::vector<std::size_t> projection;
    /// Members of each coset, ascending; cosets ordered by their smallest member.
    std::vector<std::vector<std::size_t>> cosets;
};

/// H/K for commutative H. Throws UnsupportedError for noncommutative H, DomainError when K
/// is not a subhypergroup, VerificationError if the coset structure depends on representatives.
QuotientHypergroup quotient(const FiniteHypergroup& h, const std::vector<std::size_t>& subgroup);

/// H₁ × H₂ with c[(x₁,x₂)][(y₁,y₂)][(z₁,z₂)] = c₁[x₁][y₁][z₁]·c₂[x₂][y₂][z₂]; element (x₁,x₂) at x₁·|H₂| + x₂.
FiniteHypergroup product(const FiniteHypergroup& a, const FiniteHypergroup& b);

/// Every subhypergroup, as sorted index sets; {e} first, H last.
std::vector<std::vector<std::size_t>> subhypergroups(const FiniteHypergroup& h);

}  // namespace hyperkit
