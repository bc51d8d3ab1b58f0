#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "boundaryk/errors.hpp"
#include "boundaryk/fgab.hpp"
#include "oracles.hpp"

using namespace boundaryk;
using fgab::FgAbGroup;
using fgab::FieldSpec;
using fgab::GroupElement;
using fgab::PointedGroup;
using fgab::PointedVerdict;

namespace {

FgAbGroup torsion_group(std::vector<mpz_class> t) { return FgAbGroup(0, std::move(t)); }

GroupElement free_point(std::vector<long> coords) {
    GroupElement e;
    for (long c : coords) e.free_coords.emplace_back(c);
    return e;
}

FgAbGroup random_group(std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> rank(0, 3);
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_int_distribution<int> mult(1, 3);
    std::vector<mpz_class> torsion;
    mpz_class t = 1 + pick(rng);
    for (int i = 0; i < pick(rng); ++i) {
        if (t < 2) t = 2;
        torsion.push_back(t);
        t *= mult(rng);
    }
    return FgAbGroup(rank(rng), std::move(torsion));
}

}  // namespace

TEST_CASE("normal form is validated at construction") {
    CHECK_THROWS_AS(FgAbGroup(0, {1}), std::invalid_argument);
    CHECK_THROWS_AS(FgAbGroup(0, {4, 2}), std::invalid_argument);
    CHECK_THROWS_AS(FgAbGroup(0, {2, 3}), std::invalid_argument);
    CHECK_NOTHROW(FgAbGroup(2, {2, 4, 8}));
}

TEST_CASE("direct sum") {
    CHECK(direct_sum(FgAbGroup::free(1), FgAbGroup::free(1)) == FgAbGroup::free(2));
    CHECK(direct_sum(torsion_group({2}), torsion_group({4})) == torsion_group({2, 4}));
    // coprime cyclic factors fuse
    CHECK(direct_sum(torsion_group({2}), torsion_group({3})) == torsion_group({6}));
    CHECK(direct_sum(torsion_group({2, 4}), torsion_group({3})) == torsion_group({2, 12}));
}

TEST_CASE("direct sum matches the element-order census oracle") {
    const std::vector<std::pair<std::vector<mpz_class>, std::vector<mpz_class>>> cases = {
        {{2}, {3}}, {{2}, {4}}, {{2, 4}, {6}}, {{5, 5}, {5}}, {{2, 2}, {3, 9}}};
    for (const auto& [ta, tb] : cases) {
        const FgAbGroup sum = direct_sum(torsion_group(ta), torsion_group(tb));
        std::vector<mpz_class> concat = ta;
        concat.insert(concat.end(), tb.begin(), tb.end());
        CHECK(oracles::order_census(sum.torsion()) == oracles::order_census(concat));
    }
}

TEST_CASE("iso_check is structural equality of normal forms") {
    CHECK(iso_check(FgAbGroup::free(2), FgAbGroup::free(2)));
    CHECK(iso_check(FgAbGroup(1, {2}), FgAbGroup(1, {2})));
    CHECK_FALSE(iso_check(torsion_group({2, 4}), torsion_group({8})));
    // the census oracle separates them too
    CHECK(oracles::order_census({2, 4}) != oracles::order_census({8}));
}

TEST_CASE("hom into the integers kills torsion") {
    CHECK(hom_to_Z(FgAbGroup::free(4)) == FgAbGroup::free(4));
    CHECK(hom_to_Z(torsion_group({5, 5})) == FgAbGroup());
    CHECK(hom_to_Z(FgAbGroup(1, {2})) == FgAbGroup::free(1));
}

TEST_CASE("tensor and tor with a field") {
    const FieldSpec q = FieldSpec::rationals();
    const FieldSpec f5 = FieldSpec::prime_field(5);
    const FieldSpec f2 = FieldSpec::prime_field(2);

    CHECK(tensor_with_field(FgAbGroup::free(3), q) == 3);
    CHECK(tensor_with_field(torsion_group({5, 5}), f5) == 2);
    CHECK(tensor_with_field(torsion_group({5, 5}), f2) == 0);

    CHECK(tor_with_field(FgAbGroup(2, {2, 6}), q) == 0);
    CHECK(tor_with_field(torsion_group({5, 5}), f5) == 2);
    CHECK(tor_with_field(FgAbGroup::free(4), f5) == 0);

    CHECK_THROWS_AS((void)FieldSpec::prime_field(9), NotPrime);
    CHECK_THROWS_AS((void)FieldSpec::prime_field(1), NotPrime);
}

TEST_CASE("tensor minus tor is additive and rational over Q") {
    std::mt19937 rng(9001);
    const FieldSpec fields[] = {FieldSpec::rationals(), FieldSpec::prime_field(2),
                                FieldSpec::prime_field(3), FieldSpec::prime_field(5)};
    for (int trial = 0; trial < 50; ++trial) {
        const FgAbGroup a = random_group(rng);
        const FgAbGroup b = random_group(rng);
        const FgAbGroup sum = direct_sum(a, b);
        for (const auto& f : fields) {
            const long lhs = static_cast<long>(tensor_with_field(sum, f)) -
                             static_cast<long>(tor_with_field(sum, f));
            const long rhs = static_cast<long>(tensor_with_field(a, f)) -
                             static_cast<long>(tor_with_field(a, f)) +
                             static_cast<long>(tensor_with_field(b, f)) -
                             static_cast<long>(tor_with_field(b, f));
            CHECK(lhs == rhs);
        }
        CHECK(tensor_with_field(sum, FieldSpec::rationals()) == sum.free_rank());
    }
}

TEST_CASE("direct sum is commutative and associative up to iso_check") {
    std::mt19937 rng(9002);
    for (int trial = 0; trial < 50; ++trial) {
        const FgAbGroup a = random_group(rng);
        const FgAbGroup b = random_group(rng);
        const FgAbGroup c = random_group(rng);
        CHECK(iso_check(direct_sum(a, b), direct_sum(b, a)));
        CHECK(iso_check(direct_sum(direct_sum(a, b), c), direct_sum(a, direct_sum(b, c))));
    }
}

TEST_CASE("pointed isomorphism on free groups is rank plus content") {
    const PointedGroup a(FgAbGroup::free(2), free_point({1, 0}));
    const PointedGroup b(FgAbGroup::free(2), free_point({0, 1}));
    const PointedGroup c(FgAbGroup::free(2), free_point({2, 0}));
    CHECK(pointed_iso_check(a, b) == PointedVerdict::Isomorphic);
    CHECK(pointed_iso_check(a, c) == PointedVerdict::NotIsomorphic);
    // symmetric and reflexive on the decided domain
    CHECK(pointed_iso_check(b, a) == PointedVerdict::Isomorphic);
    CHECK(pointed_iso_check(c, a) == PointedVerdict::NotIsomorphic);
    CHECK(pointed_iso_check(a, a) == PointedVerdict::Isomorphic);

    // bounded enumeration of unimodular 2x2 matrices confirms both verdicts
    const auto orbit = oracles::unimodular_orbit_2d(1, 0);
    CHECK(orbit.count({0, 1}) == 1);
    CHECK(orbit.count({2, 0}) == 0);

    const std::size_t d = 2;
    std::vector<long> unit(2 * d + 2, 0);
    unit[0] = 1;
    const PointedGroup big(FgAbGroup::free(2 * d + 2), free_point(unit));
    CHECK(pointed_iso_check(big, big) == PointedVerdict::Isomorphic);
}

TEST_CASE("pointed isomorphism outside the decided domain") {
    const FgAbGroup g(1, {2});
    GroupElement torsion_pt = zero_element_of(g);
    torsion_pt.torsion_coords[0] = 1;
    const PointedGroup with_torsion(g, torsion_pt);
    CHECK(pointed_iso_check(with_torsion, with_torsion) == PointedVerdict::Undecided);

    const PointedGroup zero_a(g, zero_element_of(g));
    const PointedGroup zero_b(g, zero_element_of(g));
    CHECK(pointed_iso_check(zero_a, zero_b) == PointedVerdict::Isomorphic);

    // non-isomorphic groups refute regardless of the points
    const PointedGroup free_pt(FgAbGroup::free(1), free_point({1}));
    CHECK(pointed_iso_check(free_pt, with_torsion) == PointedVerdict::NotIsomorphic);
}

TEST_CASE("content is invariant under unimodular changes of basis") {
    std::mt19937 rng(9003);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 5;
        std::vector<long> coords(n);
        for (auto& c : coords) c = entry(rng);
        const GroupElement e = free_point(coords);

        const intlin::IntMatrix u = oracles::random_unimodular(rng, n);
        GroupElement moved;
        for (std::size_t i = 0; i < n; ++i) {
            mpz_class acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc += u(i, j) * e.free_coords[j];
            moved.free_coords.push_back(acc);
        }
        CHECK(content(moved) == content(e));
    }
}

TEST_CASE("pointed direct sum keeps the point and extends by zero") {
    const PointedGroup a(FgAbGroup::free(1), free_point({1}));
    const PointedGroup sum = pointed_direct_sum(a, torsion_group({5, 5}));
    CHECK(sum.group == FgAbGroup(1, {5, 5}));
    CHECK(sum.point.free_coords == std::vector<mpz_class>{1});
    CHECK(sum.point.torsion_coords == std::vector<mpz_class>{0, 0});

    const PointedGroup b(FgAbGroup(1, {2}), [] {
        GroupElement e;
        e.free_coords = {3};
        e.torsion_coords = {1};
        return e;
    }());
    // a point with torsion support cannot be pushed through a torsion merge
    CHECK_THROWS_AS((void)pointed_direct_sum(b, torsion_group({3})), std::logic_error);
    // against a free group the chain is untouched and the point carries over
    const PointedGroup ok = pointed_direct_sum(b, FgAbGroup::free(2));
    CHECK(ok.group == FgAbGroup(3, {2}));
    CHECK(ok.point.free_coords == std::vector<mpz_class>{3, 0, 0});
    CHECK(ok.point.torsion_coords == std::vector<mpz_class>{1});
}

TEST_CASE("rendering and parsing round-trip") {
    CHECK(fgab::to_string(FgAbGroup()) == "0");
    CHECK(fgab::to_string(FgAbGroup::free(1)) == "Z");
    CHECK(fgab::to_string(FgAbGroup(2, {2, 4})) == "Z^2 ⊕ Z/2 ⊕ Z/4");

    std::mt19937 rng(9004);
    for (int trial = 0; trial < 40; ++trial) {
        const FgAbGroup g = random_group(rng);
        CHECK(fgab::parse_group(fgab::to_string(g)) == g);
    }

    CHECK(fgab::parse_group("0") == FgAbGroup());
    CHECK(fgab::parse_group("Z ⊕ Z/2") == FgAbGroup(1, {2}));
    CHECK_THROWS_AS((void)fgab::parse_group("Z/4 ⊕ Z/2"), std::invalid_argument);
    CHECK_THROWS_AS((void)fgab::parse_group("banana"), std::invalid_argument);
    CHECK_THROWS_AS((void)fgab::parse_group("Z^-1"), std::invalid_argument);
}

TEST_CASE("group_from_factors drops unit factors") {
    CHECK(fgab::group_from_factors({1, 1, 2, 6}, 3) == FgAbGroup(3, {2, 6}));
    CHECK(fgab::group_from_factors({}, 0) == FgAbGroup());
}
