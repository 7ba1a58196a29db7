#include "corpus.hpp"

#include "hyperkit/characters.hpp"
#include "hyperkit/io.hpp"

namespace corpus {

using namespace hyperkit;

std::vector<Rational> hp_grid() {
    return {Rational(3, 2), Rational(2), Rational(5, 2), Rational(3), Rational(10)};
}

std::vector<CayleyTable> class_groups() {
    return {groups::symmetric(3), groups::symmetric(4), groups::dihedral(4), groups::quaternion(), groups::cyclic(6)};
}

FiniteHypergroup jewett() {
    return FiniteHypergroup::create(io::read_hypergroup_file(HYPERKIT_DATA_DIR "/jewett.hgf"));
}

namespace {

std::vector<Entry> build() {
    std::vector<Entry> out;
    std::vector<Entry> dualizable;
    for (std::size_t n = 1; n <= 12; ++n) {
        const auto g = group_hypergroup(groups::cyclic(n));
        dualizable.push_back({g.name(), g, true});
    }
    for (const auto& p : hp_grid()) {
        const auto h = hp(p);
        dualizable.push_back({h.name(), h, false});
    }
    for (const auto& g : class_groups()) {
        const auto h = conjugacy_hypergroup(g);
        dualizable.push_back({h.name(), h, g.abelian()});
    }
    for (const auto& e : dualizable) {
        out.push_back(e);
        const DualResult d = dual_hypergroup(characters(e.h));
        if (d.is_hypergroup()) out.push_back({"dual " + e.name, d.dual(), e.group});
    }

    const auto z2 = group_hypergroup(groups::cyclic(2));
    for (const auto& p : {Rational(3, 2), Rational(2), Rational(3)}) {
        const auto j = join(z2, hp(p));
        out.push_back({j.hypergroup.name(), j.hypergroup, false});
        auto q = quotient(j.hypergroup, j.from_k);
        out.push_back({q.hypergroup.name(), q.hypergroup, false});
    }
    const auto cs3 = conjugacy_hypergroup(groups::symmetric(3));
    const auto j = join(cs3, hp(Rational(2)));
    out.push_back({j.hypergroup.name(), j.hypergroup, false});
    out.push_back({"quotient of " + j.hypergroup.name(), quotient(j.hypergroup, j.from_k).hypergroup, false});

    const auto z4 = group_hypergroup(groups::cyclic(4));
    out.push_back({"Z4/{0,2}", quotient(z4, {0, 2}).hypergroup, true});
    out.push_back({"Conj(S3)/A3", quotient(cs3, {0, 2}).hypergroup, true});
    out.push_back({"Jewett", jewett(), false});
    return out;
}

}  // namespace

const std::vector<Entry>& all() {
    static const std::vector<Entry> entries = build();
    return entries;
}

}  // namespace corpus
