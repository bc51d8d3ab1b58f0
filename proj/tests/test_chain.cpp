#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "boundaryk/chain.hpp"
#include "boundaryk/errors.hpp"
#include "boundaryk/snf.hpp"
#include "oracles.hpp"

using namespace boundaryk;
using chain::ChainComplexData;
using fgab::FgAbGroup;
using intlin::IntMatrix;

namespace {

chain::SimplicialData boundary_of_4_simplex() {
    chain::SimplicialData s(4);
    for (int v = 0; v < 5; ++v) s[0].push_back({v});
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) s[1].push_back({a, b});
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            for (int c = b + 1; c < 5; ++c) s[2].push_back({a, b, c});
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            for (int c = b + 1; c < 5; ++c)
                for (int d = c + 1; d < 5; ++d) s[3].push_back({a, b, c, d});
    return s;
}

// all faces of the solid tetrahedron {0,1,2,3}: a contractible 3-complex
chain::SimplicialData solid_tetrahedron() {
    chain::SimplicialData t(4);
    for (int v = 0; v < 4; ++v) t[0].push_back({v});
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) t[1].push_back({a, b});
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            for (int c = b + 1; c < 4; ++c) t[2].push_back({a, b, c});
    t[3].push_back({0, 1, 2, 3});
    return t;
}

ChainComplexData zero_boundary_complex(std::size_t d) {
    return ChainComplexData::from_matrices({1, d, d, 1},
                                           {IntMatrix(1, d), IntMatrix(d, d), IntMatrix(d, 1)});
}

ChainComplexData torsion55_complex() {
    IntMatrix d2(2, 2);
    d2(0, 0) = 5;
    d2(1, 1) = 5;
    return ChainComplexData::from_matrices({1, 2, 2, 1}, {IntMatrix(1, 2), d2, IntMatrix(2, 1)});
}

}  // namespace

TEST_CASE("single point") {
    const auto c = ChainComplexData::from_simplicial({{{0}}});
    CHECK(c.top_dim() == 0);
    CHECK(c.ranks() == std::vector<std::size_t>{1});
    const auto profile = chain::homology(c);
    CHECK(profile.h[0] == FgAbGroup::free(1));
    CHECK(profile.h[1] == FgAbGroup());
    CHECK(profile.h[2] == FgAbGroup());
    CHECK(profile.h[3] == FgAbGroup());
    CHECK(profile.base_point_class.free_coords == std::vector<mpz_class>{1});
    CHECK(chain::cohomology(c)[0] == FgAbGroup::free(1));
}

TEST_CASE("boundary of the 4-simplex is a 3-sphere") {
    const auto c = ChainComplexData::from_simplicial(boundary_of_4_simplex());
    CHECK(c.ranks() == std::vector<std::size_t>{5, 10, 10, 5});
    CHECK(c.euler_characteristic() == 0);

    const auto profile = chain::homology(c);
    CHECK(profile.h[0] == FgAbGroup::free(1));
    CHECK(profile.h[1] == FgAbGroup());
    CHECK(profile.h[2] == FgAbGroup());
    CHECK(profile.h[3] == FgAbGroup::free(1));
    CHECK(fgab::content(profile.base_point_class) == 1);

    const auto coh = chain::cohomology(c);
    CHECK(coh[0] == FgAbGroup::free(1));
    CHECK(coh[1] == FgAbGroup());
    CHECK(coh[2] == FgAbGroup());
    CHECK(coh[3] == FgAbGroup::free(1));

    const auto report = chain::validate_closed_oriented_3mfld(c);
    CHECK(report.all_pass);
}

TEST_CASE("simplicial validation errors") {
    // triangle with edge {1,2} missing
    CHECK_THROWS_AS((void)ChainComplexData::from_simplicial(
                        {{{0}, {1}, {2}}, {{0, 1}, {0, 2}}, {{0, 1, 2}}}),
                    MissingFace);
    CHECK_THROWS_AS((void)ChainComplexData::from_simplicial({{{0}, {1}}, {{1, 0}}}),
                    NonIncreasingVertices);
    CHECK_THROWS_AS((void)ChainComplexData::from_simplicial({{{0}}, {{0, 0}}}),
                    NonIncreasingVertices);
    CHECK_THROWS_AS((void)ChainComplexData::from_simplicial({{{0}, {1}}, {{0, 1}, {0, 1}}}),
                    DuplicateSimplex);
    // a full 4-simplex is four-dimensional
    chain::SimplicialData dim4(5);
    dim4[4].push_back({0, 1, 2, 3, 4});
    CHECK_THROWS_AS((void)ChainComplexData::from_simplicial(dim4), DimensionTooHigh);
}

TEST_CASE("matrix-mode construction errors") {
    IntMatrix bad(1, 1);
    bad(0, 0) = 1;
    CHECK_THROWS_AS(
        (void)ChainComplexData::from_matrices({1, 1, 1}, {bad, bad}),
        BoundarySquare);
    CHECK_THROWS_AS((void)ChainComplexData::from_matrices({1, 2}, {IntMatrix(2, 2)}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)ChainComplexData::from_matrices({1, 1, 1, 1, 1},
                                                          {IntMatrix(1, 1), IntMatrix(1, 1),
                                                           IntMatrix(1, 1), IntMatrix(1, 1)}),
                    DimensionTooHigh);
}

TEST_CASE("three-torus from zero boundary matrices") {
    const auto c = zero_boundary_complex(3);
    const auto profile = chain::homology(c);
    CHECK(profile.h[0] == FgAbGroup::free(1));
    CHECK(profile.h[1] == FgAbGroup::free(3));
    CHECK(profile.h[2] == FgAbGroup::free(3));
    CHECK(profile.h[3] == FgAbGroup::free(1));
    CHECK(chain::validate_closed_oriented_3mfld(c).all_pass);
}

TEST_CASE("torsion complex: homology, cohomology, and universal coefficients") {
    const auto c = torsion55_complex();
    const auto profile = chain::homology(c);
    CHECK(profile.h[0] == FgAbGroup::free(1));
    CHECK(profile.h[1] == FgAbGroup(0, {5, 5}));
    CHECK(profile.h[2] == FgAbGroup());
    CHECK(profile.h[3] == FgAbGroup::free(1));

    const auto coh = chain::cohomology(c);
    // H^1 = Hom(H_1, Z) = 0 and the torsion of H^2 is the torsion of H_1
    CHECK(coh[1] == FgAbGroup());
    CHECK(coh[2] == FgAbGroup(0, {5, 5}));
    CHECK(chain::validate_closed_oriented_3mfld(c).all_pass);
}

TEST_CASE("field coefficient dimensions") {
    const auto s3 = ChainComplexData::from_simplicial(boundary_of_4_simplex());
    CHECK(chain::homology_with_field(s3, fgab::FieldSpec::prime_field(2)) ==
          std::array<std::size_t, 4>{1, 0, 0, 1});
    CHECK(chain::homology_with_field(s3, fgab::FieldSpec::rationals()) ==
          std::array<std::size_t, 4>{1, 0, 0, 1});

    const auto t = torsion55_complex();
    CHECK(chain::homology_with_field(t, fgab::FieldSpec::prime_field(5)) ==
          std::array<std::size_t, 4>{1, 2, 2, 1});
    CHECK(chain::homology_with_field(t, fgab::FieldSpec::prime_field(2)) ==
          std::array<std::size_t, 4>{1, 0, 0, 1});
    CHECK(chain::homology_with_field(t, fgab::FieldSpec::rationals()) ==
          std::array<std::size_t, 4>{1, 0, 0, 1});
}

TEST_CASE("universal coefficients cross-check on every fixture complex") {
    const std::vector<ChainComplexData> complexes = {
        ChainComplexData::from_simplicial(boundary_of_4_simplex()),
        ChainComplexData::from_simplicial(solid_tetrahedron()),
        zero_boundary_complex(0),
        zero_boundary_complex(2),
        zero_boundary_complex(5),
        torsion55_complex()};
    const fgab::FieldSpec fields[] = {fgab::FieldSpec::prime_field(2),
                                      fgab::FieldSpec::prime_field(3),
                                      fgab::FieldSpec::prime_field(5)};
    for (const auto& c : complexes) {
        const auto profile = chain::homology(c);
        // rational dimensions are the free ranks
        const auto qdims = chain::homology_with_field(c, fgab::FieldSpec::rationals());
        for (int k = 0; k <= 3; ++k)
            CHECK(qdims[static_cast<std::size_t>(k)] ==
                  profile.h[static_cast<std::size_t>(k)].free_rank());
        // dim H_k(F_p) = free(H_k) + t_p(H_k) + t_p(H_{k-1})
        for (const auto& f : fields) {
            const auto dims = chain::homology_with_field(c, f);
            for (int k = 0; k <= 3; ++k) {
                const auto& hk = profile.h[static_cast<std::size_t>(k)];
                const std::size_t below =
                    k == 0 ? 0 : fgab::tor_with_field(profile.h[static_cast<std::size_t>(k - 1)], f);
                CHECK(dims[static_cast<std::size_t>(k)] ==
                      hk.free_rank() + fgab::tor_with_field(hk, f) + below);
            }
        }
        // Euler characteristic from chain ranks equals the homology version
        long chi_h = 0;
        for (int k = 0; k <= 3; ++k)
            chi_h += (k % 2 == 0 ? 1 : -1) *
                     static_cast<long>(profile.h[static_cast<std::size_t>(k)].free_rank());
        CHECK(c.euler_characteristic() == chi_h);

        // universal coefficients for cohomology: free parts match degreewise,
        // torsion shifts up one degree
        const auto coh = chain::cohomology(c);
        for (int k = 0; k <= 3; ++k) {
            CHECK(coh[static_cast<std::size_t>(k)].free_rank() ==
                  profile.h[static_cast<std::size_t>(k)].free_rank());
            const auto& torsion_below =
                k == 0 ? std::vector<mpz_class>{}
                       : profile.h[static_cast<std::size_t>(k - 1)].torsion();
            CHECK(coh[static_cast<std::size_t>(k)].torsion() == torsion_below);
        }
    }
}

TEST_CASE("contractible 3-complex fails the closedness clause") {
    const auto c = ChainComplexData::from_simplicial(solid_tetrahedron());
    const auto report = chain::validate_closed_oriented_3mfld(c);
    CHECK_FALSE(report.all_pass);
    REQUIRE(report.clauses.size() == 5);
    CHECK(report.clauses[0].pass);        // connected
    CHECK_FALSE(report.clauses[1].pass);  // H3 = 0, not Z
}

TEST_CASE("point complex fails validation with explicit clauses") {
    const auto c = ChainComplexData::from_simplicial({{{0}}});
    const auto report = chain::validate_closed_oriented_3mfld(c);
    CHECK_FALSE(report.all_pass);
    CHECK(report.clauses[0].pass);
    CHECK_FALSE(report.clauses[1].pass);
    CHECK_FALSE(report.clauses[2].pass);  // chi = 1
    CHECK_FALSE(report.clauses[3].pass);  // duality
    CHECK(report.clauses[4].pass);        // H^1 = 0 is torsion-free
}

TEST_CASE("randomized matrix complexes satisfy the homological identities") {
    // boundary maps built to compose to zero: each map factors through a
    // kernel basis of the previous transpose
    std::mt19937 rng(11002);
    std::uniform_int_distribution<std::size_t> size(1, 5);
    std::uniform_int_distribution<long> entry(-3, 3);

    const auto random_mat = [&](std::size_t r, std::size_t c) {
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
        return m;
    };
    const auto kernel_basis = [](const IntMatrix& m) {
        // columns of v past the rank span ker(m)
        const auto f = intlin::smith_normal_form(m);
        const std::size_t rank = f.invariant_factors.size();
        IntMatrix basis(m.cols(), m.cols() - rank);
        for (std::size_t i = 0; i < basis.rows(); ++i)
            for (std::size_t j = 0; j < basis.cols(); ++j) basis(i, j) = f.v(i, rank + j);
        return basis;
    };

    const fgab::FieldSpec fields[] = {fgab::FieldSpec::prime_field(2),
                                      fgab::FieldSpec::prime_field(3),
                                      fgab::FieldSpec::prime_field(7)};
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t c0 = size(rng), c1 = size(rng), c2 = size(rng), c3 = size(rng);
        const IntMatrix d3 = random_mat(c2, c3);
        const IntMatrix k2 = kernel_basis(intlin::transpose(d3));  // c2 x k
        const IntMatrix d2 = intlin::mul(random_mat(c1, k2.cols()), intlin::transpose(k2));
        const IntMatrix k1 = kernel_basis(intlin::transpose(d2));
        const IntMatrix d1 = intlin::mul(random_mat(c0, k1.cols()), intlin::transpose(k1));

        const auto c = ChainComplexData::from_matrices({c0, c1, c2, c3}, {d1, d2, d3});
        const auto profile = chain::homology(c);
        const auto coh = chain::cohomology(c);

        long chi_h = 0;
        for (int k = 0; k <= 3; ++k)
            chi_h += (k % 2 == 0 ? 1 : -1) *
                     static_cast<long>(profile.h[static_cast<std::size_t>(k)].free_rank());
        CHECK(c.euler_characteristic() == chi_h);

        const auto qdims = chain::homology_with_field(c, fgab::FieldSpec::rationals());
        for (int k = 0; k <= 3; ++k) {
            const std::size_t kk = static_cast<std::size_t>(k);
            CHECK(qdims[kk] == profile.h[kk].free_rank());
            CHECK(coh[kk].free_rank() == profile.h[kk].free_rank());
            CHECK(coh[kk].torsion() ==
                  (k == 0 ? std::vector<mpz_class>{} : profile.h[kk - 1].torsion()));
            for (const auto& f : fields) {
                const std::size_t below = k == 0 ? 0 : fgab::tor_with_field(profile.h[kk - 1], f);
                CHECK(chain::homology_with_field(c, f)[kk] ==
                      profile.h[kk].free_rank() + fgab::tor_with_field(profile.h[kk], f) + below);
            }
        }
    }
}

TEST_CASE("boundary composite vanishes on randomized simplicial complexes") {
    // random subcomplexes of the boundary of the 4-simplex, closed under faces
    std::mt19937 rng(11001);
    const auto full = boundary_of_4_simplex();
    for (int trial = 0; trial < 20; ++trial) {
        chain::SimplicialData data(4);
        data[0] = full[0];
        std::uniform_int_distribution<int> keep(0, 1);
        for (std::size_t k = 1; k < 4; ++k) {
            for (const auto& s : full[k]) {
                bool faces_present = true;
                if (k >= 2) {
                    for (std::size_t i = 0; i <= k && faces_present; ++i) {
                        std::vector<int> face = s;
                        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                        faces_present = std::find(data[k - 1].begin(), data[k - 1].end(), face) !=
                                        data[k - 1].end();
                    }
                }
                if (faces_present && keep(rng)) data[k].push_back(s);
            }
        }
        const auto c = ChainComplexData::from_simplicial(data);
        for (int n = 1; n < c.top_dim(); ++n)
            CHECK(intlin::mul(c.boundary(n), c.boundary(n + 1)).is_zero());
    }
}
