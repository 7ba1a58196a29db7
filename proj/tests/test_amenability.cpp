#include "hyperkit/amenability.hpp"
#include "hyperkit/builders.hpp"
#include "hyperkit/characters.hpp"
#include "hyperkit/groups.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hyperkit;

TEST_CASE("diagonal of the trivial hypergroup") {
    const auto d = diagonal(characters(group_hypergroup(groups::cyclic(1))));
    REQUIRE(d.size() == 1);
    CHECK(std::abs(d[0][0] - 1.0) < 1e-15);
}

TEST_CASE("diagonal of Z2") {
    const auto d = diagonal(characters(group_hypergroup(groups::cyclic(2))));
    CHECK(std::abs(d[0][0] - 0.5) < 1e-15);
    CHECK(std::abs(d[1][1] - 0.5) < 1e-15);
    CHECK(std::abs(d[0][1]) < 1e-15);
    CHECK(std::abs(d[1][0]) < 1e-15);
}

TEST_CASE("diagonal of H_2") {
    const auto t = characters(hp(Rational(2)));
    const auto d = diagonal(t);
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y)
            CHECK(std::abs(d[x][y] - (1.0 + 4.0 * t.value(1, x) * t.value(1, y)) / 9.0) < 1e-15);
}

TEST_CASE("AM of H_p") {
    CHECK(*exact_amenability_constant(characters(hp(Rational(2)))) == Rational(17, 9));
    double previous = 1.0;
    for (double p : {1.5, 2.0, 3.0, 10.0, 100.0}) {
        const double am = amenability_constant(characters(hp(p)));
        CHECK(am == doctest::Approx((5 * p * p - 2 * p + 1) / ((p + 1) * (p + 1))).epsilon(1e-10));
        CHECK(am > previous);
        CHECK(am < 5.0);
        previous = am;
    }
    for (const auto& p : corpus::hp_grid())
        CHECK(*exact_amenability_constant(characters(hp(p))) == oracle::hp_amenability(p));
}

TEST_CASE("AM of groups is 1") {
    for (std::size_t n : {1u, 2u, 5u, 8u}) {
        const auto r = amenability(characters(group_hypergroup(groups::cyclic(n))));
        CHECK(r.am == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(*exact_amenability_constant(characters(group_hypergroup(groups::cyclic(4)))) == 1);
}

TEST_CASE("AM of class hypergroups matches the centre of the group algebra") {
    for (const auto& g : {groups::symmetric(3), groups::dihedral(4), groups::quaternion(), groups::symmetric(4)}) {
        CAPTURE(g.name());
        const double am = amenability_constant(characters(conjugacy_hypergroup(g)));
        CHECK(am == doctest::Approx(oracle::center_amenability(g)).epsilon(1e-10));
        CHECK(am > 1.0);
    }
    CHECK(*exact_amenability_constant(characters(conjugacy_hypergroup(groups::symmetric(3)))) == Rational(7, 3));
}

TEST_CASE("the diagonal is the unique solution of its defining equations") {
    for (const auto& h : {hp(Rational(2)), group_hypergroup(groups::cyclic(3)), conjugacy_hypergroup(groups::symmetric(3)),
                          corpus::jewett(), join(group_hypergroup(groups::cyclic(2)), hp(Rational(3))).hypergroup}) {
        CAPTURE(h.name());
        const auto t = characters(h);
        const auto solved = oracle::solve_diagonal(h);
        CHECK(solved.rank == solved.unknowns);
        CHECK(solved.residual < 1e-10);
        const auto d = diagonal(t);
        for (std::size_t x = 0; x < h.size(); ++x)
            for (std::size_t y = 0; y < h.size(); ++y) CHECK(std::abs(d[x][y] - solved.density[x][y]) < 1e-10);
        CHECK(amenability_constant(t) == doctest::Approx(solved.norm).epsilon(1e-10));
    }
}

TEST_CASE("amenability report residuals") {
    const auto r = amenability(characters(corpus::jewett()));
    CHECK(r.residual_identity < 1e-10);
    CHECK(r.residual_commute < 1e-10);
    REQUIRE(r.exact_am);
    CHECK(r.am == doctest::Approx(r.exact_am->get_d()).epsilon(1e-12));
}

TEST_CASE("diagonal is idempotent on H x H") {
    for (const auto& h : {hp(Rational(2)), conjugacy_hypergroup(groups::symmetric(3)), group_hypergroup(groups::cyclic(4))}) {
        const auto t = characters(h);
        const auto sq = product(h, h);
        const auto d = diagonal_on_square(t, sq);
        CHECK(max_abs_diff(convolve(d, d, Haar::unnormalized), d) < 1e-12);
    }
    const auto h = hp(Rational(2));
    CHECK_THROWS(diagonal_on_square(characters(h), h));
}

TEST_CASE("every AM value above 1 is reached inside H_p") {
    for (double r : {1.01, 17.0 / 9.0, 3.0, 4.9}) {
        const double p = hp_parameter_for_amenability(r);
        CHECK(amenability_constant(characters(hp(p))) == doctest::Approx(r).epsilon(1e-9));
    }
    CHECK(hp_parameter_for_amenability(17.0 / 9.0) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK_THROWS(hp_parameter_for_amenability(5.0));
    CHECK_THROWS(hp_parameter_for_amenability(0.5));
}
