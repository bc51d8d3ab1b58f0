#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boundaryk/ahss.hpp"
#include "boundaryk/chain.hpp"
#include "boundaryk/fgab.hpp"

namespace boundaryk::crossed {

enum class Mode { Integral, FieldCoeff };
std::string to_string(Mode m);

// The Kirchberg-Phillips classification data of a boundary crossed
// product: (K0, class of the unit, K1), plus the coefficient mode and the
// hypotheses the computation leaned on.
struct PointedKInvariants {
    fgab::PointedGroup k0;
    fgab::FgAbGroup k1;
    Mode mode = Mode::Integral;
    std::optional<fgab::FieldSpec> field;  // engaged exactly in FieldCoeff mode
    std::vector<std::string> assumptions;
};

struct SequenceTerm {
    std::string symbol;
    fgab::FgAbGroup group;
};

// 0 -> left -> middle -> right -> 0 with the rewrite rule naming how the
// left term was identified and why the sequence splits.
struct ShortExactSequence {
    SequenceTerm left;
    SequenceTerm middle;
    SequenceTerm right;
    std::string left_identification;
    std::string splitting;
};

struct EmersonMeyerLadder {
    ShortExactSequence k0_sequence;
    ShortExactSequence k1_sequence;
};

struct CrossedProductResult {
    PointedKInvariants invariants;
    EmersonMeyerLadder ladder;
};

// Integral mode: K0 = K0(M) + K^1(M) with the unit at the leading K0(M)
// coordinate, K1 = K1(M) + K^0(M). Requires torsion-free H1; throws
// IntegralTorsionUnsupported otherwise (the K1 extension over a torsion
// K^0(M) has no covered splitting; use field coefficients).
CrossedProductResult crossed_product_k_integral(const ahss::KHomologyResult& hom_k,
                                                const ahss::KTheoryResult& coh_k,
                                                const chain::HomologyProfile& profile,
                                                std::vector<std::string> assumptions = {});

// Field mode: K0 and K1 are F-vector spaces of dimension
// 2 + dim H_1(M;F) + dim H^1(M;F) = 2 + 2*dim H_1(M;F), unit at the first
// coordinate.
CrossedProductResult crossed_product_k_field(const chain::HomologyProfile& profile,
                                             const fgab::FieldSpec& f,
                                             std::vector<std::string> assumptions = {});

enum class KPVerdict { Isomorphic, NotIsomorphic, Incomparable };
std::string to_string(KPVerdict v);

// Kirchberg-Phillips comparison: same mode, pointed-isomorphic K0 and
// isomorphic K1. Different modes (or an undecidable point comparison on
// hand-built data) give Incomparable.
KPVerdict kp_compare(const PointedKInvariants& a, const PointedKInvariants& b);

// Equivalence classes under kp_compare, deterministically ordered by
// (rank, lexicographic invariant data); members keep input order.
// Throws MixedModes when the corpus mixes coefficient modes.
struct Partition {
    std::vector<std::vector<std::size_t>> classes;  // indices into the input
};
Partition classify_corpus(const std::vector<PointedKInvariants>& invariants);

}  // namespace boundaryk::crossed
