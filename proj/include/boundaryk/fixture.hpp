#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "boundaryk/chain.hpp"
#include "boundaryk/fgab.hpp"
#include "boundaryk/intmatrix.hpp"

namespace boundaryk::cli {

inline constexpr const char* kFixtureSchema = "boundaryk-fixture/1";
inline constexpr const char* kReportSchema = "boundaryk-report/1";

enum class FixtureMode { Simplices, Matrices };

struct FixtureFlags {
    bool closed = false;
    bool orientable = false;
    bool hyperbolic = false;
};

// One manifold input: either per-degree simplex lists or raw boundary
// matrices, plus declared hypotheses and an optional homology regression.
// parse_fixture always leaves `complex` populated and validated.
struct ManifoldFixture {
    std::string name;
    FixtureMode mode = FixtureMode::Matrices;
    chain::SimplicialData simplices;                 // Simplices mode
    std::vector<std::size_t> ranks;                  // Matrices mode
    std::vector<intlin::IntMatrix> boundaries;       // Matrices mode
    FixtureFlags flags;
    std::optional<std::array<fgab::FgAbGroup, 4>> expected_homology;
    std::optional<chain::ChainComplexData> complex;
};

// Throws SchemaError for structural problems (including boundary matrices
// whose composite is nonzero); simplicial construction errors propagate
// from the chain module.
ManifoldFixture parse_fixture(const std::string& text);

// Canonical serialization; parse_fixture(serialize_fixture(f)) rebuilds f.
std::string serialize_fixture(const ManifoldFixture& fixture);

}  // namespace boundaryk::cli
