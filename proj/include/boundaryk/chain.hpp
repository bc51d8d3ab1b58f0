#pragma once

#include <array>
#include <string>
#include <vector>

#include "boundaryk/fgab.hpp"
#include "boundaryk/intmatrix.hpp"

namespace boundaryk::chain {

enum class Provenance { Simplicial, RawMatrices };

// simplices[k] lists the k-simplices as strictly increasing vertex tuples
using SimplexList = std::vector<std::vector<int>>;
using SimplicialData = std::vector<SimplexList>;

// Chain complex of free abelian groups in degrees 0..top_dim (top_dim <= 3)
// with validated shapes and boundary_n * boundary_{n+1} = 0.
class ChainComplexData {
public:
    // Alternating-sign face convention. Throws MissingFace,
    // NonIncreasingVertices, DuplicateSimplex, DimensionTooHigh.
    static ChainComplexData from_simplicial(const SimplicialData& simplices);

    // boundaries[n-1] maps degree n to n-1. Throws BoundarySquare or
    // std::invalid_argument on shape mismatches, DimensionTooHigh.
    static ChainComplexData from_matrices(std::vector<std::size_t> ranks,
                                          std::vector<intlin::IntMatrix> boundaries);

    int top_dim() const { return static_cast<int>(ranks_.size()) - 1; }
    const std::vector<std::size_t>& ranks() const { return ranks_; }
    std::size_t rank(int n) const;  // 0 outside 0..top_dim

    // boundary_n : C_n -> C_{n-1}; zero-shaped outside 1..top_dim, so
    // degree edges need no special handling in callers.
    intlin::IntMatrix boundary(int n) const;

    Provenance provenance() const { return provenance_; }
    long euler_characteristic() const;

private:
    ChainComplexData(std::vector<std::size_t> ranks, std::vector<intlin::IntMatrix> boundaries,
                     Provenance provenance);
    std::vector<std::size_t> ranks_;
    std::vector<intlin::IntMatrix> boundaries_;
    Provenance provenance_;
};

// Integral homology in degrees 0..3 (trivial above top_dim) and the class
// of the chosen base 0-cell in H0.
struct HomologyProfile {
    std::array<fgab::FgAbGroup, 4> h;
    fgab::GroupElement base_point_class;
};

HomologyProfile homology(const ChainComplexData& c);
std::array<fgab::FgAbGroup, 4> cohomology(const ChainComplexData& c);
std::array<std::size_t, 4> homology_with_field(const ChainComplexData& c, const fgab::FieldSpec& f);

struct ValidationClause {
    std::string name;
    bool pass;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationClause> clauses;
    bool all_pass = false;
    std::string digest() const;
};

// Homological consequences of being a closed connected orientable
// 3-manifold: H0 = Z, H3 = Z, zero Euler characteristic, H^k matching
// H_{3-k}, torsion-free H^1. Report-valued; never throws.
ValidationReport validate_closed_oriented_3mfld(const ChainComplexData& c);

}  // namespace boundaryk::chain
