#include "boundaryk/crossed.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "boundaryk/errors.hpp"

namespace boundaryk::crossed {

std::string to_string(Mode m) { return m == Mode::Integral ? "integral" : "field"; }

std::string to_string(KPVerdict v) {
    switch (v) {
        case KPVerdict::Isomorphic: return "Isomorphic";
        case KPVerdict::NotIsomorphic: return "NotIsomorphic";
        default: return "Incomparable";
    }
}

namespace {

constexpr const char* kAssemblyRule =
    "K_*(reduced group C*-algebra) identified with K_*(M) through the assembly isomorphism "
    "(Baum-Connes property of the fundamental group)";

fgab::GroupElement unit_vector(std::size_t dim) {
    fgab::GroupElement e;
    e.free_coords.assign(dim, 0);
    if (dim > 0) e.free_coords[0] = 1;
    return e;
}

}  // namespace

CrossedProductResult crossed_product_k_integral(const ahss::KHomologyResult& hom_k,
                                                const ahss::KTheoryResult& coh_k,
                                                const chain::HomologyProfile& profile,
                                                std::vector<std::string> assumptions) {
    if (!profile.h[1].is_free())
        throw IntegralTorsionUnsupported(fgab::to_string(profile.h[1]));

    CrossedProductResult out;

    // K0 sequence: 0 -> K_0(M) -> K_0(crossed product) -> K^1(M) -> 0,
    // split because K^1(M) is free; the unit sits at the image of the
    // base-point class, the leading coordinate of the K_0(M) summand.
    out.invariants.k0 = fgab::pointed_direct_sum(hom_k.k0, coh_k.k1);
    out.invariants.k1 = fgab::direct_sum(hom_k.k1, coh_k.k0);
    out.invariants.mode = Mode::Integral;
    out.invariants.assumptions = std::move(assumptions);
    out.invariants.assumptions.push_back("H1(M) torsion-free: H1 = " +
                                         fgab::to_string(profile.h[1]));

    out.ladder.k0_sequence = {
        {"K_0(C*_r(G)) = K_0(M)", hom_k.k0.group},
        {"K_0(C(boundary G) x G)", out.invariants.k0.group},
        {"K^1(M)", coh_k.k1},
        kAssemblyRule,
        "splits: K^1(M) is free"};
    out.ladder.k1_sequence = {
        {"K_1(C*_r(G)) = K_1(M)", hom_k.k1},
        {"K_1(C(boundary G) x G)", out.invariants.k1},
        {"K^0(M)", coh_k.k0},
        kAssemblyRule,
        "splits: K^0(M) is free"};

    // Produced integral invariants are free of equal rank with a content-1
    // unit; anything else indicates an unvalidated profile upstream.
    if (!out.invariants.k0.group.is_free() || !out.invariants.k1.is_free() ||
        out.invariants.k0.group.free_rank() != out.invariants.k1.free_rank() ||
        fgab::content(out.invariants.k0.point) != 1)
        throw std::logic_error("crossed_product_k_integral: produced invariants out of contract");
    return out;
}

CrossedProductResult crossed_product_k_field(const chain::HomologyProfile& profile,
                                             const fgab::FieldSpec& f,
                                             std::vector<std::string> assumptions) {
    // dim H_1(M;F) by universal coefficients; Tor from H_0 vanishes for
    // validated profiles (H_0 = Z) and is kept for honesty.
    const std::size_t dim_h1 =
        fgab::tensor_with_field(profile.h[1], f) + fgab::tor_with_field(profile.h[0], f);
    // Field cohomology is the dual space: dim H^1(M;F) = dim H_1(M;F).
    const std::size_t dim = 2 + 2 * dim_h1;

    CrossedProductResult out;
    out.invariants.k0 =
        fgab::PointedGroup(fgab::FgAbGroup::free(dim), unit_vector(dim));
    out.invariants.k1 = fgab::FgAbGroup::free(dim);
    out.invariants.mode = Mode::FieldCoeff;
    out.invariants.field = f;
    out.invariants.assumptions = std::move(assumptions);
    out.invariants.assumptions.push_back("coefficient field " + fgab::to_string(f) +
                                         "; dimensions record F-vector spaces");

    const fgab::FgAbGroup half = fgab::FgAbGroup::free(1 + dim_h1);
    const std::string split = "splits: vector spaces over " + fgab::to_string(f);
    const std::string assembly =
        std::string(kAssemblyRule) + ", with coefficients in " + fgab::to_string(f);
    out.ladder.k0_sequence = {{"K_0(C*_r(G); F) = K_0(M; F)", half},
                              {"K_0(C(boundary G) x G; F)", out.invariants.k0.group},
                              {"K^1(M; F)", half},
                              assembly,
                              split};
    out.ladder.k1_sequence = {{"K_1(C*_r(G); F) = K_1(M; F)", half},
                              {"K_1(C(boundary G) x G; F)", out.invariants.k1},
                              {"K^0(M; F)", half},
                              assembly,
                              split};
    return out;
}

KPVerdict kp_compare(const PointedKInvariants& a, const PointedKInvariants& b) {
    if (a.mode != b.mode) return KPVerdict::Incomparable;
    if (a.mode == Mode::FieldCoeff && !(a.field == b.field)) return KPVerdict::Incomparable;

    const fgab::PointedVerdict pointed = fgab::pointed_iso_check(a.k0, b.k0);
    if (pointed == fgab::PointedVerdict::Undecided) return KPVerdict::Incomparable;

    const bool k1_iso = fgab::iso_check(a.k1, b.k1);
    if (pointed == fgab::PointedVerdict::Isomorphic && k1_iso) return KPVerdict::Isomorphic;
    return KPVerdict::NotIsomorphic;
}

namespace {

// Stable class key: ranks first, then the full normal-form data.
std::string class_key(const PointedKInvariants& inv) {
    std::ostringstream os;
    auto pad = [](std::size_t n) {
        std::string s = std::to_string(n);
        return std::string(20 - std::min<std::size_t>(20, s.size()), '0') + s;
    };
    os << pad(inv.k0.group.free_rank() + inv.k0.group.torsion().size()) << "|";
    os << fgab::to_string(inv.k0.group) << "|" << fgab::content(inv.k0.point).get_str() << "|";
    os << fgab::to_string(inv.k1);
    return os.str();
}

}  // namespace

Partition classify_corpus(const std::vector<PointedKInvariants>& invariants) {
    Partition partition;
    if (invariants.empty()) return partition;

    for (std::size_t i = 1; i < invariants.size(); ++i) {
        if (invariants[i].mode != invariants[0].mode) throw MixedModes();
        if (invariants[i].mode == Mode::FieldCoeff && !(invariants[i].field == invariants[0].field))
            throw MixedModes();
    }

    std::vector<std::size_t> parent(invariants.size());
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&parent](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < invariants.size(); ++i)
        for (std::size_t j = i + 1; j < invariants.size(); ++j)
            if (kp_compare(invariants[i], invariants[j]) == KPVerdict::Isomorphic)
                parent[find(i)] = find(j);

    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> root_class(invariants.size(), SIZE_MAX);
    for (std::size_t i = 0; i < invariants.size(); ++i) {
        const std::size_t r = find(i);
        if (root_class[r] == SIZE_MAX) {
            root_class[r] = classes.size();
            classes.emplace_back();
        }
        classes[root_class[r]].push_back(i);
    }

    std::sort(classes.begin(), classes.end(),
              [&invariants](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
                  const std::string ka = class_key(invariants[a.front()]);
                  const std::string kb = class_key(invariants[b.front()]);
                  if (ka != kb) return ka < kb;
                  return a.front() < b.front();
              });
    partition.classes = std::move(classes);
    return partition;
}

}  // namespace boundaryk::crossed
