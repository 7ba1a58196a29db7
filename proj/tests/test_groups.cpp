#include "hyperkit/errors.hpp"
#include "hyperkit/groups.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hyperkit;

namespace {

bool associative(const CayleyTable& g) {
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
            for (std::size_t c = 0; c < g.order(); ++c)
                if (g.multiply(g.multiply(a, b), c) != g.multiply(a, g.multiply(b, c))) return false;
    return true;
}

}  // namespace

TEST_CASE("generated groups are groups of the right order") {
    struct Case {
        CayleyTable g;
        std::size_t order, classes;
        bool abelian;
    };
    const std::vector<Case> cases{
        {groups::cyclic(1), 1, 1, true},       {groups::cyclic(6), 6, 6, true},
        {groups::dihedral(3), 6, 3, false},    {groups::dihedral(4), 8, 5, false},
        {groups::dihedral(5), 10, 4, false},   {groups::symmetric(3), 6, 3, false},
        {groups::symmetric(4), 24, 5, false},  {groups::symmetric(5), 120, 7, false},
        {groups::quaternion(), 8, 5, false},
    };
    for (const auto& c : cases) {
        CAPTURE(c.g.name());
        CHECK(c.g.order() == c.order);
        CHECK(c.g.abelian() == c.abelian);
        CHECK(associative(c.g));
        for (std::size_t a = 0; a < c.g.order(); ++a) CHECK(c.g.multiply(a, c.g.inverse(a)) == c.g.identity());
        CHECK(conjugacy_classes(c.g).classes.size() == c.classes);
    }
    CHECK_THROWS_AS(groups::symmetric(6), DomainError);
    CHECK_THROWS_AS(groups::cyclic(0), DomainError);
}

TEST_CASE("conjugacy classes agree with orbit enumeration") {
    for (const auto& g : {groups::symmetric(3), groups::symmetric(4), groups::dihedral(4), groups::quaternion(),
                          groups::cyclic(6), groups::dihedral(5)}) {
        CAPTURE(g.name());
        const auto part = conjugacy_classes(g);
        CHECK(part.classes == oracle::classes(g));
        for (std::size_t c = 0; c < part.classes.size(); ++c)
            for (std::size_t a : part.classes[c]) CHECK(part.class_of[a] == c);
    }
}

TEST_CASE("quaternion labels and relations") {
    const auto q = groups::quaternion();
    const auto& l = q.labels();
    auto at = [&](const std::string& s) { return static_cast<std::size_t>(std::find(l.begin(), l.end(), s) - l.begin()); };
    CHECK(q.multiply(at("i"), at("j")) == at("k"));
    CHECK(q.multiply(at("j"), at("i")) == at("-k"));
    CHECK(q.multiply(at("i"), at("i")) == at("-1"));
    const auto part = conjugacy_classes(q);
    std::vector<std::size_t> sizes;
    for (const auto& c : part.classes) sizes.push_back(c.size());
    CHECK(sizes == std::vector<std::size_t>{1, 1, 2, 2, 2});
}

TEST_CASE("Cayley table validation") {
    CHECK_THROWS_AS(CayleyTable::create({{0, 1}, {1, 1}}), StructuralError);
    CHECK_THROWS_AS(CayleyTable::create({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}), StructuralError);  // left identity only
    CHECK_THROWS_AS(CayleyTable::create({{0, 1}}), StructuralError);
    // A Latin square with identity that is not associative (a loop of order 5).
    CHECK_THROWS_AS(CayleyTable::create({{0, 1, 2, 3, 4},
                                         {1, 0, 3, 4, 2},
                                         {2, 4, 0, 1, 3},
                                         {3, 2, 4, 0, 1},
                                         {4, 3, 1, 2, 0}}),
                    StructuralError);
}
