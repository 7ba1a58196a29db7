#include "hyperkit/builders.hpp"
#include "hyperkit/characters.hpp"
#include "hyperkit/errors.hpp"
#include "hyperkit/groups.hpp"
#include "hyperkit/uncertainty.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hyperkit;

TEST_CASE("point mass at the identity attains equality") {
    for (const auto& h : {hp(Rational(2)), conjugacy_hypergroup(groups::symmetric(4)), corpus::jewett()}) {
        const auto r = uncertainty_check(characters(h), HFunction::point_mass(h, h.identity()));
        CHECK(r.holds);
        CHECK(r.support_size == doctest::Approx(1.0));
        CHECK(r.dual_mass == doctest::Approx(h.total_mass()));
        CHECK(r.ratio == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.dual_support.size() == h.size());
    }
}

TEST_CASE("H_2 examples") {
    const auto h = hp(Rational(2));
    const auto t = characters(h);
    auto r = uncertainty_check(t, HFunction::point_mass(h, 1));
    CHECK(r.support_size == doctest::Approx(2.0));
    CHECK(r.dual_mass == doctest::Approx(3.0));
    CHECK(r.lhs == doctest::Approx(3.0));
    CHECK(r.ratio == doctest::Approx(2.0));

    r = uncertainty_check(t, t.as_function(1));
    CHECK(r.support_size == doctest::Approx(3.0));
    CHECK(r.dual_mass == doctest::Approx(2.0));
    CHECK(r.dual_support == std::vector<std::size_t>{1});
    CHECK(r.ratio == doctest::Approx(2.0));
}

TEST_CASE("zero function is rejected") {
    const auto h = hp(Rational(2));
    CHECK_THROWS_AS(uncertainty_check(characters(h), HFunction::zero(h)), DomainError);
}

TEST_CASE("supports are relative to the largest value") {
    const auto h = hp(Rational(2));
    const auto t = characters(h);
    const auto r = uncertainty_check(t, HFunction(h, {1e6, 1e-5}));
    CHECK(r.support == std::vector<std::size_t>{0});
    const auto s = uncertainty_check(t, HFunction(h, {1e-12, 2e-12}));
    CHECK(s.support.size() == 2);
}

TEST_CASE("on a group the dual mass counts d squared") {
    const auto g = group_hypergroup(groups::cyclic(6));
    const auto t = characters(g);
    // Indicator of the subgroup {0, 3}: f̂ lives on the 3 characters trivial on it.
    const auto r = uncertainty_check(t, HFunction(g, {1, 0, 0, 1, 0, 0}));
    CHECK(r.dual_support.size() == 3);
    CHECK(r.dual_mass == doctest::Approx(3.0));
    CHECK(r.ratio == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("class functions reproduce the group inequality with d squared") {
    for (const auto& g : {groups::symmetric(4), groups::quaternion(), groups::dihedral(5)}) {
        CAPTURE(g.name());
        const auto h = conjugacy_hypergroup(g);
        const auto t = characters(h);
        const auto irr = oracle::group_irreps(g);
        for (std::size_t cls = 0; cls < h.size(); ++cls) {
            const auto r = uncertainty_check(t, HFunction::point_mass(h, cls));
            // Irreps whose character does not vanish on the class carry the Fourier support.
            double expected = 0.0;
            for (std::size_t p = 0; p < irr.chi.size(); ++p)
                if (std::abs(irr.chi[p][cls]) > 1e-9) expected += irr.degree[p] * irr.degree[p];
            CHECK(r.dual_mass == doctest::Approx(expected).epsilon(1e-10));
            CHECK(r.support_size == doctest::Approx(static_cast<double>(irr.classes[cls].size())));
            CHECK(r.holds);
        }
    }
}

TEST_CASE("tightness scan") {
    const auto h = hp(Rational(3));
    const auto s = tightness_scan(characters(h), 64);
    CHECK(s.violations.empty());
    CHECK(s.best.ratio == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.best.description == "indicator of {e}");

    const auto c = conjugacy_hypergroup(groups::symmetric(3));
    const auto sc = tightness_scan(characters(c), 64);
    REQUIRE(sc.subhypergroup_indicators.size() == 3);
    for (const auto& e : sc.subhypergroup_indicators) CHECK(e.ratio == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(sc.evaluated == 3 + 3 + 3 + 64);

    for (std::size_t n : {4u, 6u, 12u}) {
        const auto g = group_hypergroup(groups::cyclic(n));
        for (const auto& e : tightness_scan(characters(g), 8).subhypergroup_indicators)
            CHECK(e.ratio == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("random sparse functions are nonzero and seeded") {
    const auto h = conjugacy_hypergroup(groups::symmetric(4));
    std::uint64_t a = 5, b = 5;
    for (int i = 0; i < 50; ++i) {
        const auto f = random_sparse_function(h, a);
        const auto g = random_sparse_function(h, b);
        CHECK_FALSE(f.is_zero());
        CHECK(max_abs_diff(f, g) == 0.0);
    }
}
