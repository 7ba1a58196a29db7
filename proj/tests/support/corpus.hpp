#pragma once

#include "hyperkit/builders.hpp"
#include "hyperkit/groups.hpp"
#include "hyperkit/hypergroup.hpp"

#include <string>
#include <vector>

namespace corpus {

struct Entry {
    std::string name;
    hyperkit::FiniteHypergroup h;
    bool group = false;
};

/// The p grid of the two-element family, as exact rationals.
std::vector<hyperkit::Rational> hp_grid();

/// Groups whose class hypergroups are checked against the character oracle.
std::vector<hyperkit::CayleyTable> class_groups();

/// Z_n (n <= 12), H_p, Conj(G), the duals of all of these, the joins Z2 v H_p and Conj(S3) v H_2,
/// their quotients, the two quotient examples, and the Jewett hypergroup.
const std::vector<Entry>& all();

hyperkit::FiniteHypergroup jewett();

}  // namespace corpus
